#pragma once

// Square-integrable forms.  A k-form on C[z, z^-1],
//
//   w = sum a_{n0..nk} z^{n0} dz^{n1} ... dz^{nk},
//
// is represented on l2(Z) with D0 = N by  sum a n1...nk z^{n0+...+nk}  up to
// the sign (-1)^k, so (w, w) is the l2 norm of that Laurent polynomial (its
// "aggregate") and the null space K_k is {aggregate = 0}.  Forms on A_f are
// pulled back through the symbol map alpha -> z, beta -> 0.

#include "nct/algebra.hpp"
#include "nct/certificate.hpp"
#include "nct/connes.hpp"
#include "nct/truncation.hpp"

#include "json.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace nct {

class CircleForm {
 public:
  using Index = std::vector<long>;  // (n0, n1, ..., nk)

  explicit CircleForm(int degree) : degree_(degree) {
    if (degree < 0) throw std::invalid_argument("form degree must be >= 0");
  }

  /// c z^{n0} dz^{n1} ... dz^{nk}; any n_j = 0 with j >= 1 gives zero.
  static CircleForm term(const Index& n, const Rational& c = 1) {
    if (n.empty()) throw std::invalid_argument("a circle form term needs n0");
    CircleForm f(static_cast<int>(n.size()) - 1);
    f.add(n, c);
    return f;
  }

  /// z^r dz ... dz with k factors dz.
  static CircleForm power_times_dz(long r, int k, const Rational& c = 1) {
    Index n(static_cast<std::size_t>(k) + 1, 1);
    n[0] = r;
    return term(n, c);
  }

  void add(const Index& n, const Rational& c) {
    if (static_cast<int>(n.size()) != degree_ + 1) throw std::invalid_argument("term degree mismatch");
    if (c == 0) return;
    for (std::size_t t = 1; t < n.size(); ++t)
      if (n[t] == 0) return;  // d(1) = 0
    auto [it, fresh] = terms_.try_emplace(n, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  int degree() const { return degree_; }
  const std::map<Index, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend CircleForm operator+(CircleForm a, const CircleForm& b) {
    a.require_degree(b);
    for (const auto& [n, c] : b.terms_) a.add(n, c);
    return a;
  }
  friend CircleForm operator-(CircleForm a, const CircleForm& b) {
    a.require_degree(b);
    for (const auto& [n, c] : b.terms_) a.add(n, -c);
    return a;
  }
  friend CircleForm operator*(const Rational& s, const CircleForm& a) {
    CircleForm r(a.degree_);
    for (const auto& [n, c] : a.terms_) r.add(n, s * c);
    return r;
  }
  bool operator==(const CircleForm& o) const { return degree_ == o.degree_ && terms_ == o.terms_; }

  /// sum a n1...nk z^{n0+...+nk}.
  LaurentPoly aggregate() const {
    LaurentPoly p;
    for (const auto& [n, c] : terms_) {
      Rational w = c;
      long total = n[0];
      for (std::size_t t = 1; t < n.size(); ++t) {
        w *= n[t];
        total += n[t];
      }
      p.add(total, w);
    }
    return p;
  }

  /// Universal differential: z^{n0} dz^{n1}... -> dz^{n0} dz^{n1}...
  CircleForm differential() const {
    CircleForm r(degree_ + 1);
    for (const auto& [n, c] : terms_) {
      Index m{0};
      m.insert(m.end(), n.begin(), n.end());
      r.add(m, c);
    }
    return r;
  }

  /// Left multiplication by z^m.
  CircleForm times_left(long m) const {
    CircleForm r(degree_);
    for (const auto& [n, c] : terms_) {
      Index shifted = n;
      shifted[0] += m;
      r.add(shifted, c);
    }
    return r;
  }

  /// Right multiplication by z^m, via (w dz^a) z^m = w d(z^{a+m}) - (w z^a) dz^m.
  CircleForm times_right(long m) const {
    CircleForm r(degree_);
    for (const auto& [n, c] : terms_) r = r + term_times_right(n, m, c);
    return r;
  }

  /// Appends dz^m to every term.
  CircleForm times_dz(long m) const {
    CircleForm r(degree_ + 1);
    for (const auto& [n, c] : terms_) {
      Index longer = n;
      longer.push_back(m);
      r.add(longer, c);
    }
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << c << " z^" << n[0];
      for (std::size_t t = 1; t < n.size(); ++t) os << " dz^" << n[t];
    }
    return os.str();
  }

 private:
  static CircleForm term_times_right(const Index& n, long m, const Rational& c) {
    if (n.size() == 1) return term({n[0] + m}, c);
    Index head(n.begin(), n.end() - 1);
    long a = n.back();
    auto prefix = term(head, c);
    auto first = prefix.times_dz(a + m);
    auto second = prefix.times_right(a).times_dz(m);
    return first - second;
  }

  void require_degree(const CircleForm& o) const {
    if (degree_ != o.degree_) throw std::invalid_argument("circle forms of different degree");
  }

  int degree_;
  std::map<Index, Rational> terms_;
};

/// (w, v) = l2 pairing of the aggregates.
inline Rational l2_inner_product(const CircleForm& w, const CircleForm& v) {
  if (w.degree() != v.degree()) throw std::invalid_argument("l2_inner_product: degree mismatch");
  auto a = w.aggregate();
  auto b = v.aggregate();
  Rational s = 0;
  for (const auto& [n, c] : a.coeffs()) s += c * b.coeff(n);
  return s;
}

inline bool kernel_membership(const CircleForm& w) { return w.aggregate().is_zero(); }

// ---------------------------------------------------------------------------
// The null-space relations

/// z^{n0} dz^{n1}...dz^{nk} - n1...nk z^{n0+...+nk-k} dz...dz.
inline CircleForm kernel_relation_shift(const CircleForm::Index& n) {
  Rational prod = 1;
  long total = 0;
  for (std::size_t t = 0; t < n.size(); ++t) {
    total += n[t];
    if (t) prod *= n[t];
  }
  const int k = static_cast<int>(n.size()) - 1;
  return CircleForm::term(n) - CircleForm::power_times_dz(total - k, k, prod);
}

/// dz^r dz...dz - r z^{r-1} dz...dz (k differentials).  The n0 = 0 case of
/// kernel_relation_shift.
inline CircleForm kernel_relation_differential(long r, int k) {
  if (k < 1) throw std::invalid_argument("kernel_relation_differential needs k >= 1");
  CircleForm::Index n(static_cast<std::size_t>(k) + 1, 1);
  n[0] = 0;
  n[1] = r;
  return CircleForm::term(n) - CircleForm::power_times_dz(r - 1, k, r);
}

/// The same relation with z^r in place of z^{r-1}; outside the kernel for r != 0.
inline CircleForm kernel_relation_unshifted(long r, int k) {
  CircleForm::Index n(static_cast<std::size_t>(k) + 1, 1);
  n[0] = 0;
  n[1] = r;
  return CircleForm::term(n) - CircleForm::power_times_dz(r, k, r);
}

/// z^r dz...dz - (r+1)^{-1} dz^{r+1} dz...dz, degree k-1, r != -1.
inline CircleForm kernel_relation_primitive(long r, int k) {
  if (k < 2) throw std::invalid_argument("kernel_relation_primitive needs k >= 2");
  if (r == -1) throw std::invalid_argument("kernel_relation_primitive needs r != -1");
  CircleForm::Index n(static_cast<std::size_t>(k), 1);
  n[0] = 0;
  n[1] = r + 1;
  return CircleForm::power_times_dz(r, k - 1) - Rational(1) / Rational(r + 1) * CircleForm::term(n);
}

/// For w of degree k >= 2, a form eta in K_{k-1} with w - d(eta) in K_k.
/// Per total degree r with aggregate coefficient t:
///   eta_r = t z^{r-k+1} dz^{k-1} - (t/2) z^{r-k} d(z^2) dz^{k-2}.
inline CircleForm vanishing_primitive(const CircleForm& w) {
  const int k = w.degree();
  if (k < 2) throw std::invalid_argument("vanishing_primitive needs degree >= 2");
  CircleForm eta(k - 1);
  const auto agg = w.aggregate();
  for (const auto& [r, t] : agg.coeffs()) {
    eta = eta + CircleForm::power_times_dz(r - k + 1, k - 1, t);
    CircleForm::Index n(static_cast<std::size_t>(k), 1);
    n[0] = r - k;
    n[1] = 2;
    eta = eta - CircleForm::term(n, t / 2);
  }
  return eta;
}

// ---------------------------------------------------------------------------
// Differentials

/// z^n -> n z^n.
inline LaurentPoly l2_differential_circle(const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [n, c] : p.coeffs()) out.add(n, c * n);
  return out;
}

enum class L2Mode { literal, quotiented };

/// alpha_i beta^j beta*^k -> -i z^i; quotiented mode keeps only j = k = 0.
inline LaurentPoly l2_differential_suq2(const AlgebraElement& a, L2Mode mode = L2Mode::literal) {
  LaurentPoly out;
  for (const auto& [m, c] : a.terms()) {
    if (mode == L2Mode::quotiented && m.in_ideal()) continue;
    out.add(m.i, -c * m.i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pullback along the symbol map

/// sigma_k: every letter is replaced by its symbol and the result normal
/// ordered as z^{n0} dz^{n1} ... dz^{nk}.
inline CircleForm sigma_form(const UniversalForm& w) {
  CircleForm total(w.degree());
  for (const auto& word : w.words()) {
    CircleForm acc = CircleForm::term({0}, word.coeff);
    for (const auto& l : word.letters) {
      auto p = symbol(l.element);
      CircleForm next(acc.degree() + (l.differential ? 1 : 0));
      for (const auto& [n, c] : p.coeffs())
        next = next + c * (l.differential ? acc.times_dz(n) : acc.times_right(n));
      acc = next;
    }
    total = total + acc;
  }
  return total;
}

/// The lift z^n -> alpha_n of a circle form.
inline UniversalForm lift_form(const CircleForm& w, const Rational& q) {
  UniversalForm out(q, w.degree());
  for (const auto& [n, c] : w.terms()) {
    std::vector<AlgebraElement> da;
    for (std::size_t t = 1; t < n.size(); ++t) da.push_back(lift(LaurentPoly::monomial(n[t]), q));
    out = out + c * UniversalForm::from_terms(lift(LaurentPoly::monomial(n[0]), q), da);
  }
  return out;
}

/// (w, w) computed on l2(Z): pi0(z) = l, D0 = N, reading the column of e_0.
inline Rational circle_operator_norm_squared(const CircleForm& w) {
  long reach = 0;
  for (const auto& [n, c] : w.terms())
    for (long v : n) reach += std::abs(v);
  const int m = static_cast<int>(reach) + 2;
  TruncationWindow win(1, m);
  auto nz = build_elementary(win, Elementary::number_z);
  GridOperator total(win);
  for (const auto& [n, c] : w.terms()) {
    GridOperator prod = represent_circle(LaurentPoly::monomial(n[0]), win);
    for (std::size_t t = 1; t < n.size(); ++t) {
      auto z = represent_circle(LaurentPoly::monomial(n[t]), win);
      prod = prod * (nz * z - z * nz);
    }
    total = total + prod.scaled(Scalar(c));
  }
  Rational s = 0;
  auto col = win.flat(0, 0);
  total.for_each([&](std::size_t, std::size_t c, const Scalar& v) {
    if (c == col) s += v.rational_value() * v.rational_value();
  });
  return s;
}

struct PushforwardReport {
  CircleForm sigma;
  Rational lhs;  // circle operator route
  Rational rhs;  // aggregate formula
  CompactnessCertificate discrepancy;

  bool pass() const { return lhs == rhs && discrepancy.pass; }
  nlohmann::json to_json() const {
    return {{"sigma_form", sigma.str()},
            {"operator_value", to_string(lhs)},
            {"aggregate_value", to_string(rhs)},
            {"ideal_discrepancy", discrepancy.to_json()},
            {"pass", pass()}};
  }
};

/// (w, w)_D = (sigma(w), sigma(w))_{D0}, and pi(w) - pi(lift(sigma(w))) has
/// entries decaying in i (its letters differ by elements of I_beta).
inline PushforwardReport sigma_pushforward_check(const UniversalForm& w) {
  auto s = sigma_form(w);
  auto lifted = lift_form(s, w.q());
  int reach = std::max(w.reach(), lifted.reach());
  int m = certificate_window(reach);
  FormEvaluator ev(w.q(), TruncationWindow(m, m));
  auto residual = ev.form(w) - ev.form(lifted);
  const auto& win = ev.window();
  auto cert = compactness_certificate("pi(w) - pi(lift(sigma(w))) decays in i", residual, default_cuts(),
                                      [&](std::size_t idx, int cut) { return win.site(idx).i > cut; });
  return {s, circle_operator_norm_squared(s), l2_inner_product(s, s), cert};
}

}  // namespace nct
