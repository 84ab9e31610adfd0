#pragma once

// The Connes-de Rham complex of A_f for D = N (x) S + I (x) N, computed in
// the Calkin algebra.
//
// Universal forms are sums of words whose letters are a (plain) or da; the
// universal differential obeys the graded Leibniz rule and d^2 = 0.  Modulo
// compacts every represented form is  pi(x) + (I (x) S) pi(y)  with x, y in
// A_f, because S commutes with pi(A_f) up to compacts, S^2 = I, and
//
//   [D, alpha_i beta^j beta*^k] = -i S mon + e (j - k) mon + compact,
//
// with e = +1 for BetaConvention::raising and e = -1 for lowering.

#include "nct/algebra.hpp"
#include "nct/certificate.hpp"
#include "nct/dirac.hpp"
#include "nct/representation.hpp"
#include "nct/truncation.hpp"

#include "json.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nct {

inline int convention_sign(BetaConvention c) { return c == BetaConvention::raising ? 1 : -1; }

// ---------------------------------------------------------------------------
// Universal forms

struct FormLetter {
  bool differential = false;
  AlgebraElement element;
};

struct FormWord {
  Rational coeff;
  std::vector<FormLetter> letters;

  int degree() const {
    int n = 0;
    for (const auto& l : letters) n += l.differential ? 1 : 0;
    return n;
  }
  int reach() const {
    int r = 0;
    for (const auto& l : letters) r += l.element.shift_count();
    return r;
  }
};

class UniversalForm {
 public:
  UniversalForm(Rational q, int degree) : q_(std::move(q)), degree_(degree) {
    if (degree < 0) throw std::invalid_argument("form degree must be >= 0");
  }

  /// The degree-0 form a.
  static UniversalForm element(const AlgebraElement& a) {
    UniversalForm f(a.q(), 0);
    if (!a.is_zero()) f.words_.push_back({1, {{false, a}}});
    return f;
  }

  /// da.  Scalar multiples of I are dropped since dI = 0.
  static UniversalForm d(const AlgebraElement& a) {
    UniversalForm f(a.q(), 1);
    AlgebraElement stripped = a;
    stripped.add({0, 0, 0}, -a.coeff({0, 0, 0}));
    if (!stripped.is_zero()) f.words_.push_back({1, {{true, stripped}}});
    return f;
  }

  /// a0 da1 ... dan.
  static UniversalForm from_terms(const AlgebraElement& a0, const std::vector<AlgebraElement>& da) {
    UniversalForm f = element(a0);
    for (const auto& a : da) f = f * d(a);
    return f;
  }

  const Rational& q() const { return q_; }
  int degree() const { return degree_; }
  const std::vector<FormWord>& words() const { return words_; }
  bool is_empty() const { return words_.empty(); }

  int reach() const {
    int r = 0;
    for (const auto& w : words_) r = std::max(r, w.reach());
    return r;
  }

  friend UniversalForm operator+(UniversalForm a, const UniversalForm& b) {
    a.require_compatible(b);
    a.words_.insert(a.words_.end(), b.words_.begin(), b.words_.end());
    return a;
  }
  friend UniversalForm operator-(const UniversalForm& a, const UniversalForm& b) { return a + Rational(-1) * b; }
  friend UniversalForm operator*(const Rational& c, UniversalForm f) {
    if (c == 0) f.words_.clear();
    for (auto& w : f.words_) w.coeff *= c;
    return f;
  }

  /// Concatenation product (degrees add).
  friend UniversalForm operator*(const UniversalForm& a, const UniversalForm& b) {
    if (a.q_ != b.q_) throw std::invalid_argument("forms over different q");
    UniversalForm r(a.q_, a.degree_ + b.degree_);
    for (const auto& x : a.words_)
      for (const auto& y : b.words_) {
        FormWord w{x.coeff * y.coeff, x.letters};
        w.letters.insert(w.letters.end(), y.letters.begin(), y.letters.end());
        r.words_.push_back(std::move(w));
      }
    return r;
  }
  friend UniversalForm operator*(const AlgebraElement& x, const UniversalForm& f) { return element(x) * f; }
  friend UniversalForm operator*(const UniversalForm& f, const AlgebraElement& x) {
    auto r = f * element(x);
    r.degree_ = f.degree_;
    return r;
  }

  /// Universal differential: d(l1 ... lr) = sum_t (-1)^{deg(l1..l_{t-1})} l1 .. d(lt) .. lr.
  UniversalForm differential() const {
    UniversalForm r(q_, degree_ + 1);
    for (const auto& w : words_) {
      int before = 0;
      for (std::size_t t = 0; t < w.letters.size(); ++t) {
        const auto& letter = w.letters[t];
        if (letter.differential) {
          ++before;
          continue;
        }
        auto da = d(letter.element);
        if (da.is_empty()) continue;
        FormWord nw{before % 2 == 0 ? w.coeff : Rational(-w.coeff), w.letters};
        nw.letters[t] = da.words_.front().letters.front();
        r.words_.push_back(std::move(nw));
      }
    }
    return r;
  }

  std::string str() const {
    if (words_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t n = 0; n < words_.size(); ++n) {
      if (n) os << " + ";
      os << words_[n].coeff;
      for (const auto& l : words_[n].letters) os << (l.differential ? " d[" : " [") << l.element.str() << "]";
    }
    return os.str();
  }

 private:
  void require_compatible(const UniversalForm& o) const {
    if (q_ != o.q_) throw std::invalid_argument("forms over different q");
    if (degree_ != o.degree_) throw std::invalid_argument("adding forms of different degree");
  }

  Rational q_;
  int degree_;
  std::vector<FormWord> words_;
};

// ---------------------------------------------------------------------------
// Calkin classes  pi(plain) + (I (x) S) pi(s_part)

struct CalkinClass {
  AlgebraElement plain;
  AlgebraElement s_part;

  explicit CalkinClass(const Rational& q) : plain(q), s_part(q) {}
  CalkinClass(AlgebraElement p, AlgebraElement s) : plain(std::move(p)), s_part(std::move(s)) {}

  friend CalkinClass operator*(const CalkinClass& x, const CalkinClass& y) {
    return {x.plain * y.plain + x.s_part * y.s_part, x.plain * y.s_part + x.s_part * y.plain};
  }
  friend CalkinClass operator+(const CalkinClass& x, const CalkinClass& y) {
    return {x.plain + y.plain, x.s_part + y.s_part};
  }
  CalkinClass scaled(const Rational& c) const { return {c * plain, c * s_part}; }
  bool is_zero() const { return plain.is_zero() && s_part.is_zero(); }
  bool operator==(const CalkinClass& o) const { return plain == o.plain && s_part == o.s_part; }

  nlohmann::json to_json() const { return {{"S^0", plain.str()}, {"S^1", s_part.str()}}; }
};

/// Class of [D, pi(a)] modulo compacts.
inline CalkinClass differential_class(const AlgebraElement& a, BetaConvention conv) {
  CalkinClass c(a.q());
  const int e = convention_sign(conv);
  for (const auto& [m, coeff] : a.terms()) {
    c.plain.add(m, coeff * e * (m.j - m.k));
    c.s_part.add(m, coeff * (-m.i));
  }
  return c;
}

/// psi(form) modulo compacts.
inline CalkinClass psi_class(const UniversalForm& form, BetaConvention conv = BetaConvention::lowering) {
  CalkinClass total(form.q());
  for (const auto& w : form.words()) {
    CalkinClass prod(AlgebraElement::identity(form.q()), AlgebraElement(form.q()));
    for (const auto& l : w.letters)
      prod = prod * (l.differential ? differential_class(l.element, conv)
                                    : CalkinClass(l.element, AlgebraElement(form.q())));
    total = total + prod.scaled(w.coeff);
  }
  return total;
}

// ---------------------------------------------------------------------------
// The four-term decomposition of [D, alpha_i beta^j beta*^k]

/// coeff * (Z_z (x) X) pi(mon), X = C_p (kind 'C') or B_{p r} (kind 'B').
struct TailTerm {
  Rational coeff;
  int z_index;
  char kind;
  int p;
  int r;
  Monomial mon;
};

struct SymbolicCommutator {
  AlgebraElement s_coeff;  // coefficient of (I (x) S), S on the left
  AlgebraElement plain;
  std::vector<TailTerm> tail;
};

/// Z_k (x) C_p or Z_k (x) B_{pr}, with Z_k = q^{N+k}(N+k),
/// C_p = sum_{t=0}^{p-1} |e_t><e_{t-1}|,  B_{pr} = sum_{t=p-r+1}^{p} |e_{t-1}><e_t|.
inline GridOperator tail_operator(const TailTerm& t, const Rational& q, const TruncationWindow& w) {
  return build_from_rule(w, 1, [&](int i, int j) {
    std::vector<Move> out;
    Rational z = rational_pow(q, i + t.z_index) * (i + t.z_index);
    if (z == 0) return out;
    if (t.kind == 'C') {
      if (j >= -1 && j <= t.p - 2) out.push_back({0, 1, Scalar(z)});
    } else {
      if (j >= t.p - t.r + 1 && j <= t.p) out.push_back({0, -1, Scalar(z)});
    }
    return out;
  });
}

/// [D, mon] = -i S mon + e (j-k) mon + 2 (Z_i (x) C_p) mon' - 2 (Z_i (x) B_{pr}) mon''
/// where p counts the letters that raise j (beta* under lowering, beta under
/// raising), r the letters that lower it, and mon', mon'' drop one raising,
/// resp. lowering, letter.
inline SymbolicCommutator symbolic_commutator(const AlgebraElement& a,
                                              BetaConvention conv = BetaConvention::lowering) {
  auto cls = differential_class(a, conv);
  SymbolicCommutator out{cls.s_part, cls.plain, {}};
  const bool raising = conv == BetaConvention::raising;
  for (const auto& [m, coeff] : a.terms()) {
    const int p = raising ? m.j : m.k;
    const int r = raising ? m.k : m.j;
    if (p >= 1) {
      Monomial dropped = raising ? Monomial{m.i, m.j - 1, m.k} : Monomial{m.i, m.j, m.k - 1};
      out.tail.push_back({2 * coeff, m.i, 'C', p, r, dropped});
    }
    if (r >= 1) {
      Monomial dropped = raising ? Monomial{m.i, m.j, m.k - 1} : Monomial{m.i, m.j - 1, m.k};
      out.tail.push_back({-2 * coeff, m.i, 'B', p, r, dropped});
    }
  }
  return out;
}

inline SymbolicCommutator symbolic_commutator(const Monomial& m, const Rational& q,
                                              BetaConvention conv = BetaConvention::lowering) {
  return symbolic_commutator(AlgebraElement::monomial(q, m), conv);
}

/// Evaluates all parts of the decomposition on a window.
inline GridOperator evaluate(const SymbolicCommutator& sc, const TruncationWindow& w, BetaConvention conv) {
  const Rational& q = sc.plain.q();
  Su2Representation rep(q, conv);
  auto s = build_elementary(w, Elementary::sign_s);
  GridOperator out = s * rep.represent(sc.s_coeff, w) + rep.represent(sc.plain, w);
  for (const auto& t : sc.tail)
    out = out + (tail_operator(t, q, w) * rep.represent(t.mon, w)).scaled(Scalar(t.coeff));
  return out;
}

// ---------------------------------------------------------------------------
// Representing forms

/// pi(a0) [D, pi(a1)] ... exactly, for any diagonal D.
inline GridOperator represent_form(const UniversalForm& form, const DiracSpec& spec, const TruncationWindow& w,
                                   BetaConvention conv = BetaConvention::lowering) {
  Su2Representation rep(form.q(), conv);
  GridOperator total(w);
  for (const auto& word : form.words()) {
    GridOperator prod = GridOperator::identity(w);
    for (const auto& l : word.letters) {
      auto pa = rep.represent(l.element, w);
      prod = prod * (l.differential ? matrix_commutator(spec, pa) : pa);
    }
    total = total + prod.scaled(Scalar(word.coeff));
  }
  return total;
}

/// Floating-point evaluation of forms with memoized letters.
class FormEvaluator {
 public:
  FormEvaluator(Rational q, TruncationWindow w, DiracSpec spec = DiracSpec::generic(),
                BetaConvention conv = BetaConvention::lowering)
      : rep_(std::move(q), conv), window_(std::move(w)), spec_(std::move(spec)) {}

  const TruncationWindow& window() const { return window_; }

  const NumericGridOperator& letter(const FormLetter& l) {
    auto key = std::make_pair(l.differential, l.element.str());
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    auto pa = rep_.represent(l.element, window_);
    auto op = l.differential ? matrix_commutator(spec_, pa) : pa;
    return cache_.emplace(key, NumericGridOperator(op)).first->second;
  }

  NumericGridOperator element(const AlgebraElement& a) { return letter({false, a}); }

  NumericGridOperator form(const UniversalForm& f) {
    NumericGridOperator total(window_);
    for (const auto& word : f.words()) {
      NumericGridOperator prod(NumericGridOperator(GridOperator::identity(window_)));
      for (const auto& l : word.letters) prod = prod * letter(l);
      total = total + prod.scaled(to_double(word.coeff));
    }
    return total;
  }

  /// pi(plain) + S pi(s_part).
  NumericGridOperator calkin(const CalkinClass& c) {
    NumericGridOperator s(build_elementary(window_, Elementary::sign_s));
    return element(c.plain) + s * element(c.s_part);
  }

 private:
  Su2Representation rep_;
  TruncationWindow window_;
  DiracSpec spec_;
  std::map<std::pair<bool, std::string>, NumericGridOperator> cache_;
};

/// Certificate that psi(form) - target is compact.
inline CompactnessCertificate calkin_certificate(const std::string& identity, const UniversalForm& form,
                                                 const CalkinClass& target,
                                                 BetaConvention conv = BetaConvention::lowering) {
  int reach = std::max(form.reach(), std::max(target.plain.shift_count(), target.s_part.shift_count()));
  int m = certificate_window(reach);
  FormEvaluator ev(form.q(), TruncationWindow(m, m), DiracSpec::generic(), conv);
  auto residual = ev.form(form) - ev.calkin(target);
  return compactness_certificate(identity, residual);
}

// ---------------------------------------------------------------------------
// Classification modulo compacts

struct ModCompactsClassification {
  int degree = 0;
  CalkinClass parts;
  bool parity_ok = false;  // the part that must lie in I_beta does
  CompactnessCertificate certificate;

  std::map<int, AlgebraElement> s_power_parts() const { return {{0, parts.plain}, {1, parts.s_part}}; }

  nlohmann::json to_json() const {
    return {{"degree", degree}, {"parts", parts.to_json()}, {"parity_ok", parity_ok}, {"certificate", certificate.to_json()}};
  }
};

/// psi(form) = (I (x) S)^n x + (I (x) S)^{n+1} y with y in I_beta.
inline ModCompactsClassification classify_mod_compacts(const UniversalForm& form,
                                                       BetaConvention conv = BetaConvention::lowering) {
  auto parts = psi_class(form, conv);
  ModCompactsClassification out{form.degree(), parts, true,
                                calkin_certificate("psi(form) - classified parts", form, parts, conv)};
  if (form.degree() >= 1) {
    const auto& must_be_ideal = form.degree() % 2 == 1 ? parts.plain : parts.s_part;
    out.parity_ok = must_be_ideal.in_ideal_beta();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Omega_d^1 = A_f (+) I_beta

class Form1 {
 public:
  Form1(AlgebraElement free_part, AlgebraElement ideal_part)
      : free_(std::move(free_part)), ideal_(std::move(ideal_part)) {
    if (!ideal_.in_ideal_beta()) throw std::invalid_argument("ideal part must lie in I_beta: " + ideal_.str());
  }
  const AlgebraElement& free_part() const { return free_; }
  const AlgebraElement& ideal_part() const { return ideal_; }

  friend Form1 operator+(const Form1& a, const Form1& b) {
    return {a.free_ + b.free_, a.ideal_ + b.ideal_};
  }
  bool operator==(const Form1& o) const { return free_ == o.free_ && ideal_ == o.ideal_; }
  std::string str() const { return "(" + free_.str() + ", " + ideal_.str() + ")"; }

 private:
  AlgebraElement free_;
  AlgebraElement ideal_;
};

/// d(alpha_i beta^j beta*^k) = (-i mon, e (j-k) mon).
inline Form1 differential(const AlgebraElement& a, BetaConvention conv = BetaConvention::lowering) {
  auto c = differential_class(a, conv);
  return {c.s_part, c.plain};
}

enum class Side { left, right };

inline Form1 bimodule_action(const AlgebraElement& x, const Form1& w, Side side) {
  if (side == Side::left) return {x * w.free_part(), x * w.ideal_part()};
  return {w.free_part() * x, w.ideal_part() * x};
}

// ---------------------------------------------------------------------------
// Vanishing of Omega_d^n, n >= 2

namespace detail {

inline AlgebraElement alpha_k(const Rational& q, int k) {
  return k > 0 ? AlgebraElement::alpha(q) : AlgebraElement::alpha_star(q);
}

}  // namespace detail

/// A 1-form with psi(omega) = -(I (x) S) and psi(d omega) = 0 modulo
/// compacts: (1-q^2)^{-1} (d(alpha) alpha* + q^2 d(alpha*) alpha) corrected
/// by elements of ker psi so that its differential vanishes in the Calkin
/// algebra.  With it, omega_k = k alpha_k omega - d(alpha_k) lies in ker psi
/// and psi(d omega_k) = alpha_k.
inline UniversalForm calkin_sign_form(const Rational& q) {
  const Rational q2 = q * q;
  const auto a = AlgebraElement::alpha(q);
  const auto as = AlgebraElement::alpha_star(q);
  const auto b = AlgebraElement::beta(q);
  const auto bs = AlgebraElement::beta_star(q);
  const auto x = b * bs;
  const Rational inv = Rational(1) / (1 - q2);
  auto base = inv * (UniversalForm::d(a) * as + q2 * (UniversalForm::d(as) * a));  // psi = -S
  auto g1 = bs * UniversalForm::d(b) + b * UniversalForm::d(bs);                    // psi = 0, psi(d) = -2x
  auto g2 = as * UniversalForm::d(a) + a * UniversalForm::d(as) + (1 - q2) * (x * base);  // psi = 0
  const Rational ca = (1 + q2) / (2 * (1 - q2));
  const Rational cb = (1 + q2 * q2) / (2 * (1 - q2));
  const Rational cc = -q2 * ca;
  return base + ca * g2 + cb * g1 + cc * (x * g1);
}

/// omega_k = k alpha_k omega - d(alpha_k), k = +-1.
inline UniversalForm omega_k(const Rational& q, int k) {
  return Rational(k) * (detail::alpha_k(q, k) * calkin_sign_form(q)) - UniversalForm::d(detail::alpha_k(q, k));
}

/// (1/2)(alpha d(beta) - d(alpha beta) + q beta d(alpha)).
inline UniversalForm witness_alpha_beta(const Rational& q) {
  const auto a = AlgebraElement::alpha(q);
  const auto b = AlgebraElement::beta(q);
  return Rational(1, 2) * (a * UniversalForm::d(b) - UniversalForm::d(a * b) + q * (b * UniversalForm::d(a)));
}

/// (1/2)(alpha* d(beta) - d(alpha* beta) + q^{-1} beta d(alpha*)).
inline UniversalForm witness_alpha_star_beta(const Rational& q) {
  const auto as = AlgebraElement::alpha_star(q);
  const auto b = AlgebraElement::beta(q);
  return Rational(1, 2) *
         (as * UniversalForm::d(b) - UniversalForm::d(as * b) + (Rational(1) / q) * (b * UniversalForm::d(as)));
}

/// A form of degree m-1 in ker psi with psi(d omega) = (I (x) S)^m, m >= 2.
inline UniversalForm kernel_form_with_differential(const Rational& q, int m) {
  if (m < 2) throw std::invalid_argument("m must be >= 2");
  const Rational q2 = q * q;
  const auto a = AlgebraElement::alpha(q);
  const auto as = AlgebraElement::alpha_star(q);
  const Rational inv = Rational(1) / (1 - q2);
  // m = 2: psi(d omega_k) = alpha_k, and alpha alpha* - q^2 alpha* alpha = 1 - q^2.
  UniversalForm w = inv * (omega_k(q, 1) * as - q2 * (omega_k(q, -1) * a));
  for (int level = 2; level < m; ++level) {
    // psi(d(k w d(alpha_k))) = -(I (x) S)^{level+1} alpha_k.
    auto w1 = w * UniversalForm::d(a);
    auto wm = Rational(-1) * (w * UniversalForm::d(as));
    w = Rational(-1) * inv * (w1 * as - q2 * (wm * a));
  }
  return w;
}

struct VanishingReport {
  int n = 0;
  std::vector<CompactnessCertificate> certificates;
  bool pass() const {
    for (const auto& c : certificates)
      if (!c.pass) return false;
    return true;
  }
  nlohmann::json to_json() const {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : certificates) cs.push_back(c.to_json());
    return {{"degree", n}, {"pass", pass()}, {"certificates", cs}};
  }
};

/// Certifies the generators of psi(d J_{n-1}) that make Omega_d^n vanish.
inline VanishingReport higher_form_vanishing_check(int n, const Rational& q,
                                                   BetaConvention conv = BetaConvention::lowering) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  VanishingReport r{n, {}};
  const auto zero = CalkinClass(q);
  const auto I = AlgebraElement::identity(q);
  const auto nothing = AlgebraElement(q);
  auto add = [&](const std::string& name, const UniversalForm& f, const CalkinClass& target) {
    r.certificates.push_back(calkin_certificate(name, f, target, conv));
  };
  const auto omega = calkin_sign_form(q);
  add("psi(omega) = -(I(x)S)", omega, CalkinClass(nothing, Rational(-1) * I));
  add("psi(d omega) = 0", omega.differential(), zero);
  for (int k : {1, -1}) {
    auto ak = detail::alpha_k(q, k);
    auto wk = omega_k(q, k);
    std::string tag = k > 0 ? "omega_+1" : "omega_-1";
    add("psi(" + tag + ") = 0", wk, zero);
    add("psi(d " + tag + ") = alpha_k", wk.differential(), CalkinClass(ak, nothing));
  }
  const auto a = AlgebraElement::alpha(q);
  const auto as = AlgebraElement::alpha_star(q);
  const auto b = AlgebraElement::beta(q);
  const int e = convention_sign(conv);
  auto wab = witness_alpha_beta(q);
  add("psi(omega_ab) = 0", wab, zero);
  add("psi(d omega_ab) = -e (I(x)S) alpha beta", wab.differential(), CalkinClass(nothing, Rational(-e) * (a * b)));
  auto wasb = witness_alpha_star_beta(q);
  add("psi(omega_a*b) = 0", wasb, zero);
  add("psi(d omega_a*b) = e (I(x)S) alpha* beta", wasb.differential(), CalkinClass(nothing, Rational(e) * (as * b)));
  if (n >= 3) {
    auto w = kernel_form_with_differential(q, n - 1);
    const bool odd = (n - 1) % 2 == 1;
    add("psi(omega^(" + std::to_string(n - 1) + ")) = 0", w, zero);
    add("psi(d omega^(" + std::to_string(n - 1) + ")) = (I(x)S)^" + std::to_string(n - 1), w.differential(),
        odd ? CalkinClass(nothing, I) : CalkinClass(I, nothing));
    for (int k : {1, -1}) {
      auto ak = detail::alpha_k(q, k);
      auto wk = Rational(k) * (w * UniversalForm::d(ak));
      // psi(d wk) = -(I(x)S)^n alpha_k
      bool n_odd = n % 2 == 1;
      auto target = n_odd ? CalkinClass(nothing, Rational(-1) * ak) : CalkinClass(Rational(-1) * ak, nothing);
      std::string tag = "k=" + std::to_string(k);
      add("psi(k omega^(" + std::to_string(n - 1) + ") d alpha_k) = 0, " + tag, wk, zero);
      add("psi(d(k omega^(" + std::to_string(n - 1) + ") d alpha_k)) = -(I(x)S)^" + std::to_string(n) +
              " alpha_k, " + tag,
          wk.differential(), target);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Separation of a (I (x) S) + b from the compacts

enum class SeparationVerdict { separated, null_pair, contradiction };

inline std::string to_string(SeparationVerdict v) {
  switch (v) {
    case SeparationVerdict::separated: return "separated";
    case SeparationVerdict::null_pair: return "null_pair";
    default: return "contradiction";
  }
}

struct SeparationReport {
  SeparationVerdict verdict;
  std::vector<int> windows;
  std::vector<double> tails;  // norm beyond cut m/2 at window m
  nlohmann::json to_json() const {
    return {{"verdict", to_string(verdict)}, {"windows", windows}, {"tail_norms", tails}};
  }
};

/// Tail norms of pi(a)(I (x) S) + pi(b) beyond cut m/2 across a window
/// ladder; separated when the last two stay above a quarter of the first.
inline SeparationReport tech_lemma_probe(const AlgebraElement& a, const AlgebraElement& b,
                                         std::vector<int> ladder = {16, 32, 64},
                                         BetaConvention conv = BetaConvention::lowering) {
  if (ladder.size() < 3) throw std::invalid_argument("ladder needs at least three windows");
  SeparationReport r{SeparationVerdict::null_pair, ladder, {}};
  if (a.is_zero() && b.is_zero()) return r;
  Su2Representation rep(a.q(), conv);
  for (int m : ladder) {
    TruncationWindow w(m, m);
    NumericGridOperator op(rep.represent(a, w) * build_elementary(w, Elementary::sign_s) + rep.represent(b, w));
    r.tails.push_back(interior_tail_profile(op, {m / 2}).front());
  }
  auto n = r.tails.size();
  double floor = 0.25 * r.tails.front();
  bool separated = r.tails.front() > kTailFloor && r.tails[n - 1] >= floor && r.tails[n - 2] >= floor;
  r.verdict = separated ? SeparationVerdict::separated : SeparationVerdict::contradiction;
  return r;
}

}  // namespace nct
