#pragma once

// The *-algebra A_f generated by alpha, beta subject to
//
//   a* a + b* b = I,  a a* + q^2 b b* = I,  a b = q b a,  a b* = q b* a,  b* b = b b*
//
// stored in the normal-ordered basis  alpha_i beta^j beta*^k  (alpha_i = alpha^i
// for i >= 0 and (alpha*)^{-i} for i < 0), with exact rational coefficients
// for a fixed rational q in (0,1).

#include "nct/scalar.hpp"

#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace nct {

struct Monomial {
  int i = 0;  // power of alpha (i >= 0) or alpha* (i < 0)
  int j = 0;  // power of beta
  int k = 0;  // power of beta*

  auto operator<=>(const Monomial&) const = default;
  bool in_ideal() const { return j + k >= 1; }
  int shift_count() const { return std::abs(i) + j + k; }
};

/// Finite Laurent polynomial in z with rational coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(long n, const Rational& c = 1) {
    LaurentPoly p;
    p.add(n, c);
    return p;
  }

  void add(long n, const Rational& c) {
    if (c == 0) return;
    auto it = coeffs_.find(n);
    if (it == coeffs_.end()) {
      coeffs_.emplace(n, c);
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  const std::map<long, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(long n) const {
    auto it = coeffs_.find(n);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }
  bool is_zero() const { return coeffs_.empty(); }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    for (const auto& [n, c] : b.coeffs_) a.add(n, c);
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    for (const auto& [n, c] : b.coeffs_) a.add(n, -c);
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [n, c] : a.coeffs_)
      for (const auto& [m, d] : b.coeffs_) r.add(n + m, c * d);
    return r;
  }
  friend LaurentPoly operator*(const Rational& s, LaurentPoly a) {
    if (s == 0) return {};
    for (auto& [n, c] : a.coeffs_) c *= s;
    return a;
  }
  bool operator==(const LaurentPoly&) const = default;

  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, c] : coeffs_) {
      if (!first) os << " + ";
      first = false;
      os << c << "*z^" << n;
    }
    return os.str();
  }

 private:
  std::map<long, Rational> coeffs_;
};

class AlgebraElement {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit AlgebraElement(Rational q) : q_(std::move(q)) {
    if (q_ <= 0 || q_ >= 1) throw std::invalid_argument("q must lie in (0,1)");
  }

  static AlgebraElement monomial(const Rational& q, Monomial m, const Rational& c = 1) {
    AlgebraElement a(q);
    a.add(m, c);
    return a;
  }
  static AlgebraElement identity(const Rational& q) { return monomial(q, {0, 0, 0}); }
  static AlgebraElement scalar(const Rational& q, const Rational& c) { return monomial(q, {0, 0, 0}, c); }
  static AlgebraElement alpha(const Rational& q) { return monomial(q, {1, 0, 0}); }
  static AlgebraElement alpha_star(const Rational& q) { return monomial(q, {-1, 0, 0}); }
  static AlgebraElement beta(const Rational& q) { return monomial(q, {0, 1, 0}); }
  static AlgebraElement beta_star(const Rational& q) { return monomial(q, {0, 0, 1}); }

  const Rational& q() const { return q_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const Monomial& m, const Rational& c) {
    if (m.j < 0 || m.k < 0) throw std::invalid_argument("beta powers must be nonnegative");
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Largest |i| + j + k over the support: how far pi(a) moves a basis vector.
  int shift_count() const {
    int s = 0;
    for (const auto& [m, c] : terms_) s = std::max(s, m.shift_count());
    return s;
  }

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    a.require_same_q(b);
    for (const auto& [m, c] : b.terms_) a.add(m, c);
    return a;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    a.require_same_q(b);
    for (const auto& [m, c] : b.terms_) a.add(m, -c);
    return a;
  }
  AlgebraElement operator-() const { return Rational(-1) * *this; }
  friend AlgebraElement operator*(const Rational& s, AlgebraElement a) {
    if (s == 0) return AlgebraElement(a.q_);
    for (auto& [m, c] : a.terms_) c *= s;
    return a;
  }

  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    a.require_same_q(b);
    AlgebraElement r(a.q_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_monomial_product(ma, mb, ca * cb);
    return r;
  }

  bool operator==(const AlgebraElement& o) const { return q_ == o.q_ && terms_ == o.terms_; }

  /// Involution:  (c a_i b^j b*^k)* = c b^k b*^j a_{-i} = c q^{i(j+k)} a_{-i} b^k b*^j.
  AlgebraElement adjoint() const {
    AlgebraElement r(q_);
    for (const auto& [m, c] : terms_)
      r.add({-m.i, m.k, m.j}, c * rational_pow(q_, static_cast<long>(m.i) * (m.j + m.k)));
    return r;
  }

  /// Haar state: h(a_i b^j b*^k) = 0 unless i = 0 and j = k, and
  /// h((b b*)^j) = (1 - q^2) sum_n q^{2n} q^{2nj} = (1 - q^2) / (1 - q^{2(j+1)}).
  Rational haar_state() const {
    Rational total = 0;
    const Rational q2 = q_ * q_;
    for (const auto& [m, c] : terms_) {
      if (m.i != 0 || m.j != m.k) continue;
      total += c * (1 - q2) / (1 - rational_pow(q2, m.j + 1));
    }
    return total;
  }

  /// Membership in the ideal generated by beta and beta*.
  bool in_ideal_beta() const {
    for (const auto& [m, c] : terms_)
      if (!m.in_ideal()) return false;
    return true;
  }

  /// Circle symbol: alpha -> z, beta -> 0.
  LaurentPoly symbol() const {
    LaurentPoly p;
    for (const auto& [m, c] : terms_)
      if (!m.in_ideal()) p.add(m.i, c);
    return p;
  }

  /// Printed as  num/den * a^i b^j b*^k  terms joined by " + ".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << numerator(c) << '/' << denominator(c) << " * a^" << m.i << " b^" << m.j << " b*^" << m.k;
    }
    return os.str();
  }

  static AlgebraElement parse(const std::string& text, const Rational& q);

 private:
  void require_same_q(const AlgebraElement& o) const {
    if (q_ != o.q_) throw std::invalid_argument("algebra elements with different q");
  }

  // alpha_{i1} b^{j1} b*^{k1} alpha_{i2} b^{j2} b*^{k2}
  //   = q^{-i2 (j1 + k1)} alpha_{i1} alpha_{i2} b^{j1+j2} b*^{k1+k2}
  // and alpha_{i1} alpha_{i2} = alpha_{i1+i2} P(x), x = b b*, with
  //   a^a (a*)^b : P = prod_{t<min} (1 - q^{2(b-t)} x)
  //   (a*)^a a^b : P = prod_{t<min} (1 - q^{-2(b-1-t)} x).
  void add_monomial_product(const Monomial& x, const Monomial& y, const Rational& c) {
    Rational coeff = c * rational_pow(q_, -static_cast<long>(y.i) * (x.j + x.k));
    const int J = x.j + y.j;
    const int K = x.k + y.k;
    std::vector<Rational> poly{Rational(1)};  // coefficients of x^e
    auto times_linear = [&](const Rational& slope) {  // poly *= (1 - slope x)
      poly.push_back(0);
      for (std::size_t e = poly.size() - 1; e > 0; --e) poly[e] -= slope * poly[e - 1];
    };
    const Rational q2 = q_ * q_;
    if (x.i > 0 && y.i < 0) {
      int a = x.i, b = -y.i;
      for (int t = 0; t < std::min(a, b); ++t) times_linear(rational_pow(q2, b - t));
    } else if (x.i < 0 && y.i > 0) {
      int a = -x.i, b = y.i;
      for (int t = 0; t < std::min(a, b); ++t) times_linear(rational_pow(q2, -(b - 1 - t)));
    }
    for (std::size_t e = 0; e < poly.size(); ++e) {
      if (poly[e] == 0) continue;
      int ee = static_cast<int>(e);
      add({x.i + y.i, J + ee, K + ee}, coeff * poly[e]);
    }
  }

  Rational q_;
  Terms terms_;
};

inline AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }
inline AlgebraElement adjoint(const AlgebraElement& a) { return a.adjoint(); }
inline Rational haar_state(const AlgebraElement& a) { return a.haar_state(); }
inline bool in_ideal_beta(const AlgebraElement& a) { return a.in_ideal_beta(); }
inline LaurentPoly symbol(const AlgebraElement& a) { return a.symbol(); }

/// Lift of a Laurent polynomial into the alpha-subalgebra: z^n -> alpha_n.
inline AlgebraElement lift(const LaurentPoly& p, const Rational& q) {
  AlgebraElement a(q);
  for (const auto& [n, c] : p.coeffs()) a.add({static_cast<int>(n), 0, 0}, c);
  return a;
}

/// The five defining relations, each of which normal-orders to zero.
inline std::vector<std::pair<std::string, AlgebraElement>> defining_relations(const Rational& q) {
  auto I = AlgebraElement::identity(q);
  auto a = AlgebraElement::alpha(q);
  auto as = AlgebraElement::alpha_star(q);
  auto b = AlgebraElement::beta(q);
  auto bs = AlgebraElement::beta_star(q);
  return {
      {"a* a + b* b - I", as * a + bs * b - I},
      {"a a* + q^2 b b* - I", a * as + (q * q) * (b * bs) - I},
      {"a b - q b a", a * b - q * (b * a)},
      {"a b* - q b* a", a * bs - q * (bs * a)},
      {"b* b - b b*", bs * b - b * bs},
  };
}

namespace detail {

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

/// Parses the printed form.  Also accepts omitted factors ("1/2 * a^1"),
/// an omitted coefficient ("b^2"), and "-" between terms.
inline AlgebraElement AlgebraElement::parse(const std::string& text, const Rational& q) {
  AlgebraElement out(q);
  std::string body = detail::trim(text);
  if (body.empty()) throw std::invalid_argument("empty algebra element");
  if (body == "0") return out;

  // Split into signed terms at top-level '+' / '-' that follow whitespace.
  std::vector<std::pair<int, std::string>> pieces;
  int sign = 1;
  std::string current;
  for (std::size_t n = 0; n < body.size(); ++n) {
    char ch = body[n];
    bool separator = (ch == '+' || ch == '-') && n > 0 && body[n - 1] == ' ' && n + 1 < body.size() &&
                     body[n + 1] == ' ';
    if (separator) {
      pieces.emplace_back(sign, current);
      current.clear();
      sign = ch == '+' ? 1 : -1;
    } else {
      current.push_back(ch);
    }
  }
  pieces.emplace_back(sign, current);

  for (auto& [s, raw] : pieces) {
    std::string term = detail::trim(raw);
    if (term.empty()) throw std::invalid_argument("empty term in '" + text + "'");
    Rational coeff = 1;
    Monomial m;
    std::istringstream ts(term);
    std::string token;
    bool saw_factor = false;
    while (ts >> token) {
      if (token == "*") continue;
      if (token.rfind("a^", 0) == 0) {
        m.i = std::stoi(token.substr(2));
        saw_factor = true;
      } else if (token.rfind("b*^", 0) == 0) {
        m.k = std::stoi(token.substr(3));
        saw_factor = true;
      } else if (token.rfind("b^", 0) == 0) {
        m.j = std::stoi(token.substr(2));
        saw_factor = true;
      } else if (!saw_factor && (std::isdigit(static_cast<unsigned char>(token[0])) || token[0] == '-')) {
        coeff = parse_rational(token);
      } else {
        throw std::invalid_argument("unrecognised token '" + token + "' in '" + text + "'");
      }
    }
    if (m.j < 0 || m.k < 0) throw std::invalid_argument("negative beta power in '" + text + "'");
    out.add(m, s * coeff);
  }
  return out;
}

}  // namespace nct
