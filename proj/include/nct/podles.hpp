#pragma once

// The quantum sphere S^2_qc: generators A = A*, B with
//
//   B*B = A - A^2 + c,   BB* = q^2 A - q^4 A^2 + c,   BA = q^2 AB,
//
// its representations pi_+ and pi_- on l2(N),
//
//   pi(A) e_n = lambda q^{2n} e_n,   pi(B) e_n = c(n)^{1/2} e_{n-1},
//   lambda = 1/2 +- (c + 1/4)^{1/2},  c(n) = lambda q^{2n} - (lambda q^{2n})^2 + c,
//
// and the even triple on l2(N) (+) l2(N) with D = [[0, N], [N, 0]],
// gamma = diag(1, -1).  Elements are stored as sum p_n(A) W_n with W_n = B^n
// (n > 0), B*^{-n} (n < 0), W_0 = I.

#include "nct/algebra.hpp"
#include "nct/certificate.hpp"
#include "nct/dirac.hpp"
#include "nct/fredholm.hpp"
#include "nct/linalg.hpp"
#include "nct/scalar.hpp"
#include "nct/truncation.hpp"

#include "json.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nct {

struct SphereParams {
  Rational q;
  Rational c;

  SphereParams(Rational q_, Rational c_) : q(std::move(q_)), c(std::move(c_)) {
    require_q(q);
    if (c <= 0) throw std::invalid_argument("c must be > 0");
  }
  bool operator==(const SphereParams&) const = default;
  std::string str() const { return "q=" + to_string(q) + ", c=" + to_string(c); }
};

/// Exact square root of a nonnegative rational, if it is rational.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  Integer num = numerator(r), den = denominator(r);
  Integer sn = boost::multiprecision::sqrt(num), sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

namespace detail {

/// p(A) -> p(s A).
inline LaurentPoly scale_argument(const LaurentPoly& p, const Rational& s) {
  LaurentPoly out;
  for (const auto& [m, c] : p.coeffs()) out.add(m, c * rational_pow(s, m));
  return out;
}

}  // namespace detail

class SphereElement {
 public:
  using Parts = std::map<long, LaurentPoly>;  // n -> p_n(A)

  explicit SphereElement(SphereParams params) : params_(std::move(params)) {}

  static SphereElement monomial(const SphereParams& p, long m, long n, const Rational& coeff = 1) {
    if (m < 0) throw std::invalid_argument("A powers are nonnegative");
    SphereElement e(p);
    e.add(m, n, coeff);
    return e;
  }
  static SphereElement identity(const SphereParams& p) { return monomial(p, 0, 0); }
  static SphereElement A(const SphereParams& p) { return monomial(p, 1, 0); }
  static SphereElement B(const SphereParams& p) { return monomial(p, 0, 1); }
  static SphereElement B_star(const SphereParams& p) { return monomial(p, 0, -1); }

  const SphereParams& params() const { return params_; }
  const Parts& parts() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }

  void add(long m, long n, const Rational& coeff) {
    auto& p = parts_[n];
    p.add(m, coeff);
    if (p.is_zero()) parts_.erase(n);
  }

  /// Canonical basis expansion: (m, n) -> coefficient of A^m W_n.
  std::map<std::pair<long, long>, Rational> terms() const {
    std::map<std::pair<long, long>, Rational> out;
    for (const auto& [n, p] : parts_)
      for (const auto& [m, c] : p.coeffs()) out[{m, n}] = c;
    return out;
  }

  /// Largest |n| among the terms.
  int reach() const {
    long r = 0;
    for (const auto& [n, p] : parts_) r = std::max(r, std::abs(n));
    return static_cast<int>(r);
  }

  friend SphereElement operator+(SphereElement a, const SphereElement& b) {
    a.require_params(b);
    for (const auto& [n, p] : b.parts_) a.add_part(n, p);
    return a;
  }
  friend SphereElement operator-(const SphereElement& a, const SphereElement& b) {
    return a + Rational(-1) * b;
  }
  friend SphereElement operator*(const Rational& s, SphereElement a) {
    if (s == 0) a.parts_.clear();
    for (auto& [n, p] : a.parts_) p = s * p;
    return a;
  }
  friend SphereElement operator*(const SphereElement& a, const SphereElement& b) {
    a.require_params(b);
    SphereElement r(a.params_);
    const Rational q2 = a.params_.q * a.params_.q;
    for (const auto& [n, p] : a.parts_)
      for (const auto& [n2, p2] : b.parts_) {
        // p(A) W_n p2(A) W_n2 = p(A) p2(q^{2n} A) W_n W_n2
        LaurentPoly left = p * detail::scale_argument(p2, rational_pow(q2, n));
        for (const auto& [nn, s] : a.word_product(n, n2)) r.add_part(nn, left * s);
      }
    return r;
  }
  bool operator==(const SphereElement& o) const { return params_ == o.params_ && terms() == o.terms(); }

  /// (p(A) W_n)* = p(q^{-2n} A) W_{-n}.
  SphereElement adjoint() const {
    SphereElement r(params_);
    const Rational q2 = params_.q * params_.q;
    for (const auto& [n, p] : parts_) r.add_part(-n, detail::scale_argument(p, rational_pow(q2, -n)));
    return r;
  }

  std::string str() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mn, c] : terms()) {
      if (!first) os << " + ";
      first = false;
      os << c << " A^" << mn.first;
      if (mn.second > 0) os << " B^" << mn.second;
      if (mn.second < 0) os << " B*^" << -mn.second;
    }
    return os.str();
  }

 private:
  void add_part(long n, const LaurentPoly& p) {
    auto sum = parts_[n] + p;
    if (sum.is_zero())
      parts_.erase(n);
    else
      parts_[n] = sum;
  }

  void require_params(const SphereElement& o) const {
    if (!(params_ == o.params_)) throw std::invalid_argument("sphere elements with different parameters");
  }

  /// W_a W_b as sum s_n(A) W_n.
  std::map<long, LaurentPoly> word_product(long a, long b) const {
    if (a == 0 || b == 0 || (a > 0) == (b > 0)) return {{a + b, LaurentPoly::monomial(0)}};
    const Rational& q = params_.q;
    const Rational q2 = q * q;
    LaurentPoly rel;
    long next;
    if (a > 0) {
      // B W_{a-1}... : B^a B*^k = g(q^{2(a-1)} A) W_{a-1} W_{b+1}, g(A) = q^2 A - q^4 A^2 + c
      rel.add(0, params_.c);
      rel.add(1, q2);
      rel.add(2, -q2 * q2);
      next = a - 1;
    } else {
      // B*^k B^b = f(q^{2(a+1)} A) W_{a+1} W_{b-1}, f(A) = A - A^2 + c
      rel.add(0, params_.c);
      rel.add(1, 1);
      rel.add(2, -1);
      next = a + 1;
    }
    LaurentPoly front = detail::scale_argument(rel, rational_pow(q2, next));
    std::map<long, LaurentPoly> out;
    for (const auto& [n, s] : word_product(next, a > 0 ? b + 1 : b - 1)) out[n] = front * s;
    return out;
  }

  SphereParams params_;
  Parts parts_;
};

/// The four defining relations, each of which must normal order to zero.
inline std::vector<std::pair<std::string, SphereElement>> sphere_relations(const SphereParams& p) {
  const auto I = SphereElement::identity(p);
  const auto A = SphereElement::A(p);
  const auto B = SphereElement::B(p);
  const auto Bs = SphereElement::B_star(p);
  const Rational q2 = p.q * p.q;
  return {{"A* = A", A.adjoint() - A},
          {"B*B = A - A^2 + c", Bs * B - (A - A * A + p.c * I)},
          {"BB* = q^2 A - q^4 A^2 + c", B * Bs - (q2 * A - q2 * q2 * (A * A) + p.c * I)},
          {"BA = q^2 AB", B * A - q2 * (A * B)}};
}

// ---------------------------------------------------------------------------
// Representations

/// Radical ids: 0 -> sqrt(c + 1/4), 1 -> sqrt(c), 2 + 2n -> sqrt(c_+(n)),
/// 3 + 2n -> sqrt(c_-(n)).
class SphereRadicalTable final : public RadicalTable, public std::enable_shared_from_this<SphereRadicalTable> {
 public:
  explicit SphereRadicalTable(SphereParams p) : params_(std::move(p)) {}

  static constexpr int kMaxLevel = (RadicalMask::kMaxIds - 4) / 2;

  Scalar radicand(int id) const override {
    if (id == 0) return Scalar(params_.c + Rational(1, 4));
    if (id == 1) return Scalar(params_.c);
    int n = (id - 2) / 2;
    return c_value(id % 2 == 0 ? 1 : -1, n);
  }
  std::string symbol(int id) const override {
    if (id == 0) return "sqrt(c+1/4)";
    if (id == 1) return "sqrt(c)";
    return std::string(id % 2 == 0 ? "sqrt(c+(" : "sqrt(c-(") + std::to_string((id - 2) / 2) + "))";
  }
  std::string key() const override { return "sphere:" + params_.str(); }

  const SphereParams& params() const { return params_; }

  /// lambda_{+-} = 1/2 +- sqrt(c + 1/4).
  Scalar lambda(int sign) const {
    auto root = rational_sqrt(params_.c + Rational(1, 4));
    Scalar r = root ? Scalar(*root) : Scalar::radical(0, shared_from_this());
    return Scalar(Rational(1, 2)) + (sign > 0 ? r : -r);
  }

  /// c_{+-}(n) = lambda q^{2n} - (lambda q^{2n})^2 + c.
  Scalar c_value(int sign, int n) const {
    Scalar x = lambda(sign) * Scalar(rational_pow(params_.q * params_.q, n));
    return x - x * x + Scalar(params_.c);
  }

  /// c_{+-}(n)^{1/2}; zero at n = 0.
  Scalar root_c(int sign, int n) const {
    if (n <= 0) return {};
    if (n > kMaxLevel) throw std::out_of_range("sphere window exceeds the radical table");
    return Scalar::radical(2 + 2 * n + (sign > 0 ? 0 : 1), shared_from_this());
  }
  Scalar sqrt_c() const {
    auto root = rational_sqrt(params_.c);
    return root ? Scalar(*root) : Scalar::radical(1, shared_from_this());
  }

 private:
  SphereParams params_;
};

class SphereRep {
 public:
  explicit SphereRep(SphereParams p) : table_(std::make_shared<SphereRadicalTable>(std::move(p))) {}

  const SphereParams& params() const { return table_->params(); }
  const SphereRadicalTable& table() const { return *table_; }

  /// pi_sign(a) on one chain window.
  ChainOperator represent(const SphereElement& a, int sign, const ChainWindow& w) const {
    ChainOperator op(w, a.reach(), 0);
    add_block(op, a, sign, 0);
    return op;
  }

  /// pi_+(a) (+) pi_-(a) on two copies.
  ChainOperator represent_pair(const SphereElement& a, const ChainWindow& w2) const {
    if (w2.copies() != 2) throw std::invalid_argument("pi_+ (+) pi_- acts on two copies");
    ChainOperator op(w2, a.reach(), 0);
    add_block(op, a, 1, 0);
    add_block(op, a, -1, 1);
    return op;
  }

 private:
  void add_block(ChainOperator& op, const SphereElement& a, int sign, int copy) const {
    const auto& w = op.space();
    const Rational q2 = params().q * params().q;
    const Scalar lam = table_->lambda(sign);
    for (int k = 0; k <= w.m(); ++k) {
      for (const auto& [n, p] : a.parts()) {
        int target = k - static_cast<int>(n);
        if (!w.contains(target)) continue;
        Scalar amp(1);
        if (n > 0)
          for (int t = 0; t < n; ++t) amp = amp * table_->root_c(sign, k - t);
        else
          for (int t = 1; t <= -n; ++t) amp = amp * table_->root_c(sign, k + t);
        if (amp.is_zero()) continue;
        Scalar a_value = lam * Scalar(rational_pow(q2, target));
        Scalar poly;
        Scalar power(1);
        long top = p.coeffs().empty() ? 0 : p.coeffs().rbegin()->first;
        for (long m = 0; m <= top; ++m) {
          poly = poly + power * Scalar(p.coeff(m));
          power = power * a_value;
        }
        Scalar v = poly * amp;
        if (!v.is_zero()) op.add_entry(w.flat(target, copy), w.flat(k, copy), v);
      }
    }
  }

  std::shared_ptr<SphereRadicalTable> table_;
};

// ---------------------------------------------------------------------------
// The even triple

enum class ChainElementary { number, shift, shift_star, gamma, kappa, dirac };

/// Elementary operators on l2(N) (+) l2(N) (two copies); number and shifts act
/// on both copies.
inline ChainOperator chain_elementary(const ChainWindow& w2, ChainElementary which) {
  const int copies = w2.copies();
  int reach = (which == ChainElementary::shift || which == ChainElementary::shift_star) ? 1 : 0;
  ChainOperator op(w2, reach, 0);
  for (int cp = 0; cp < copies; ++cp)
    for (int k = 0; k <= w2.m(); ++k) {
      auto col = w2.flat(k, cp);
      switch (which) {
        case ChainElementary::number:
          if (k) op.add_entry(col, col, Scalar(k));
          break;
        case ChainElementary::shift:
          if (k >= 1) op.add_entry(w2.flat(k - 1, cp), col, Scalar(1));
          break;
        case ChainElementary::shift_star:
          if (k + 1 <= w2.m()) op.add_entry(w2.flat(k + 1, cp), col, Scalar(1));
          break;
        case ChainElementary::gamma:
          op.add_entry(col, col, Scalar(cp == 0 ? 1 : -1));
          break;
        case ChainElementary::kappa:
          if (copies != 2) throw std::invalid_argument("kappa needs two copies");
          op.add_entry(w2.flat(k, 1 - cp), col, Scalar(1));
          break;
        case ChainElementary::dirac:
          if (copies != 2) throw std::invalid_argument("D needs two copies");
          if (k) op.add_entry(w2.flat(k, 1 - cp), col, Scalar(k));
          break;
      }
    }
  return op;
}

/// [D, pi_+(a) (+) pi_-(a)].
inline ChainOperator even_triple_commutator(const SphereRep& rep, const SphereElement& a, int m) {
  ChainWindow w2(m, 2);
  auto d = chain_elementary(w2, ChainElementary::dirac);
  auto pa = rep.represent_pair(a, w2);
  return d * pa - pa * d;
}

// ---------------------------------------------------------------------------
// Boundedness certificates

struct SphereBoundednessReport {
  SphereParams params;
  TrendCertificate a_times_n;       // max n |lambda q^{2n}|
  TrendCertificate root_deviation;  // max n |c(n)^{1/2} - sqrt(c)|
  bool raising_shift_identity = false;   // [N, l*] = l*
  bool lowering_shift_identity = false;  // [N, l] = -l

  bool pass() const {
    return a_times_n.bounded && root_deviation.bounded && raising_shift_identity && lowering_shift_identity;
  }
  nlohmann::json to_json() const {
    return {{"params", params.str()},
            {"N pi(A) bounded", a_times_n.to_json()},
            {"n (c(n)^(1/2) - sqrt c) bounded", root_deviation.to_json()},
            {"[N, l*] = l*", raising_shift_identity},
            {"[N, l] = -l", lowering_shift_identity},
            {"pass", pass()}};
  }
};

inline SphereBoundednessReport sphere_boundedness_certificates(const SphereParams& p,
                                                               const std::vector<int>& scans = {8, 16, 32}) {
  SphereRep rep(p);
  const auto& t = rep.table();
  const double sqrt_c = t.sqrt_c().to_double();
  SphereBoundednessReport r{p, {"max n |lambda q^{2n}|", scans, {}, {}, false},
                            {"max n |c(n)^(1/2) - sqrt(c)|", scans, {}, {}, false}, false, false};
  for (int m : scans) {
    double best_a = 0, best_c = 0;
    std::pair<int, int> arg_a{0, 1}, arg_c{1, 1};
    for (int sign : {1, -1})
      for (int n = 1; n <= m; ++n) {
        double av = n * std::abs(t.lambda(sign).to_double()) * std::pow(to_double(p.q), 2 * n);
        double cv = n * std::abs(t.root_c(sign, n).to_double() - sqrt_c);
        if (av > best_a) best_a = av, arg_a = {n, sign};
        if (cv > best_c) best_c = cv, arg_c = {n, sign};
      }
    r.a_times_n.profile.push_back(Rational(best_a));
    r.a_times_n.argmax.push_back(arg_a);
    r.root_deviation.profile.push_back(Rational(best_c));
    r.root_deviation.argmax.push_back(arg_c);
  }
  r.a_times_n.bounded = bounded_trend(r.a_times_n.profile);
  r.root_deviation.bounded = bounded_trend(r.root_deviation.profile);
  ChainWindow w(scans.back());
  auto n = chain_elementary(w, ChainElementary::number);
  auto l = chain_elementary(w, ChainElementary::shift);
  auto ls = chain_elementary(w, ChainElementary::shift_star);
  r.raising_shift_identity = interior_equal(n * ls - ls * n, ls.with_margin(1));
  r.lowering_shift_identity = interior_equal(n * l - l * n, l.scaled(Scalar(-1)).with_margin(1));
  return r;
}

// ---------------------------------------------------------------------------
// Index pairing

enum class SphereProjection { p0, rank_two, zero };

inline std::string to_string(SphereProjection p) {
  switch (p) {
    case SphereProjection::p0: return "P0 = 0 (+) |e0><e0|";
    case SphereProjection::rank_two: return "|e0><e0| (+) |e0><e0|";
    default: return "0";
  }
}

/// dim ker - dim coker of P_- F P_+ : P_+ H_+ -> P_- H_-, F the phase of N
/// (F e_0 = kernel_phase e_0).
inline WindowIndex sphere_window_index(int m, SphereProjection which, int kernel_phase = 0) {
  std::vector<int> plus, minus;  // basis vectors in the ranges
  if (which == SphereProjection::p0) minus = {0};
  if (which == SphereProjection::rank_two) plus = {0}, minus = {0};
  std::vector<linalg::Entry<Scalar>> entries;
  for (std::size_t c = 0; c < plus.size(); ++c)
    for (std::size_t r = 0; r < minus.size(); ++r) {
      int k = plus[c];
      int phase = k == 0 ? kernel_phase : 1;
      if (minus[r] == k && phase != 0) entries.push_back({r, c, Scalar(phase)});
    }
  auto rank = certified_rank(entries);
  WindowIndex out;
  out.m_row = m;
  out.m_col = m;
  out.kernel = plus.size() - rank.rank;
  out.cokernel = minus.size() - rank.rank;
  out.method = rank.method;
  return out;
}

inline IndexReport sphere_index_pairing(int m, SphereProjection which = SphereProjection::p0, int kernel_phase = 0) {
  IndexReport report;
  report.label = "sphere pairing with " + to_string(which);
  for (int size : {m, 2 * m}) report.windows.push_back(sphere_window_index(size, which, kernel_phase));
  report.stable = report.windows[0].index() == report.windows[1].index();
  if (!report.stable) throw std::runtime_error("inconclusive: sphere index changes between windows");
  report.index = report.windows[1].index();
  return report;
}

// ---------------------------------------------------------------------------
// Forms over the sphere

struct SphereLetter {
  bool differential = false;
  SphereElement element;
};

struct SphereWord {
  Rational coeff;
  std::vector<SphereLetter> letters;
};

class SphereForm {
 public:
  SphereForm(SphereParams p, int degree) : params_(std::move(p)), degree_(degree) {}

  static SphereForm element(const SphereElement& a) {
    SphereForm f(a.params(), 0);
    if (!a.is_zero()) f.words_.push_back({1, {{false, a}}});
    return f;
  }
  /// da; multiples of I are dropped.
  static SphereForm d(const SphereElement& a) {
    SphereForm f(a.params(), 1);
    auto stripped = a;
    auto t = a.terms();
    auto it = t.find({0, 0});
    if (it != t.end()) stripped.add(0, 0, -it->second);
    if (!stripped.is_zero()) f.words_.push_back({1, {{true, stripped}}});
    return f;
  }

  int degree() const { return degree_; }
  const SphereParams& params() const { return params_; }
  const std::vector<SphereWord>& words() const { return words_; }

  int reach() const {
    int r = 0;
    for (const auto& w : words_) {
      int s = 0;
      for (const auto& l : w.letters) s += l.element.reach();
      r = std::max(r, s);
    }
    return r;
  }

  friend SphereForm operator+(SphereForm a, const SphereForm& b) {
    if (a.degree_ != b.degree_) throw std::invalid_argument("adding sphere forms of different degree");
    a.words_.insert(a.words_.end(), b.words_.begin(), b.words_.end());
    return a;
  }
  friend SphereForm operator*(const Rational& c, SphereForm f) {
    for (auto& w : f.words_) w.coeff *= c;
    return f;
  }
  friend SphereForm operator*(const SphereForm& a, const SphereForm& b) {
    SphereForm r(a.params_, a.degree_ + b.degree_);
    for (const auto& x : a.words_)
      for (const auto& y : b.words_) {
        SphereWord w{x.coeff * y.coeff, x.letters};
        w.letters.insert(w.letters.end(), y.letters.begin(), y.letters.end());
        r.words_.push_back(std::move(w));
      }
    return r;
  }

  SphereForm differential() const {
    SphereForm r(params_, degree_ + 1);
    for (const auto& w : words_) {
      int before = 0;
      for (std::size_t t = 0; t < w.letters.size(); ++t) {
        if (w.letters[t].differential) {
          ++before;
          continue;
        }
        auto da = d(w.letters[t].element);
        if (da.words_.empty()) continue;
        SphereWord nw{before % 2 == 0 ? w.coeff : Rational(-w.coeff), w.letters};
        nw.letters[t] = da.words_.front().letters.front();
        r.words_.push_back(std::move(nw));
      }
    }
    return r;
  }

 private:
  SphereParams params_;
  int degree_;
  std::vector<SphereWord> words_;
};

/// pi(form) on two copies, exactly.
inline ChainOperator represent_sphere_form(const SphereRep& rep, const SphereForm& f, int m) {
  ChainWindow w2(m, 2);
  auto d = chain_elementary(w2, ChainElementary::dirac);
  ChainOperator total(w2);
  for (const auto& word : f.words()) {
    ChainOperator prod = ChainOperator::identity(w2);
    for (const auto& l : word.letters) {
      auto pa = rep.represent_pair(l.element, w2);
      prod = prod * (l.differential ? ChainOperator(d * pa - pa * d) : pa);
    }
    total = total + prod.scaled(Scalar(word.coeff));
  }
  return total;
}

/// B dB* (dB)^{n-2} + B* dB (dB)^{n-2}.
inline SphereForm sphere_witness(const SphereParams& p, int n) {
  if (n < 2) throw std::invalid_argument("sphere witness needs n >= 2");
  auto B = SphereElement::B(p);
  auto Bs = SphereElement::B_star(p);
  auto tail = SphereForm::element(SphereElement::identity(p));
  for (int t = 0; t < n - 2; ++t) tail = tail * SphereForm::d(B);
  auto w = SphereForm::element(B) * SphereForm::d(Bs) * tail + SphereForm::element(Bs) * SphereForm::d(B) * tail;
  return w;
}

/// scale * (l^p (x) kappa^p) on two copies, l the lowering shift.
inline NumericChainOperator shift_kappa(const ChainWindow& w2, int power, double scale, bool adjoint = false) {
  ChainOperator op(w2, power, 0);
  for (int cp = 0; cp < 2; ++cp)
    for (int k = 0; k <= w2.m(); ++k) {
      int target = adjoint ? k + power : k - power;
      if (!w2.contains(target)) continue;
      int out_copy = power % 2 == 0 ? cp : 1 - cp;
      op.add_entry(w2.flat(target, out_copy), w2.flat(k, cp), Scalar(1));
    }
  return NumericChainOperator(op).scaled(scale);
}

struct SphereCalculusReport {
  SphereParams params;
  int degree;
  std::vector<CompactnessCertificate> certificates;
  CompactnessCertificate literal_two_identity;  // pi(d omega_n) - 2I, recorded only
  std::string degree_one_symbol;

  bool pass() const {
    for (const auto& c : certificates)
      if (!c.pass) return false;
    return true;
  }
  nlohmann::json to_json() const {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : certificates) cs.push_back(c.to_json());
    return {{"params", params.str()},
            {"degree", degree},
            {"certificates", cs},
            {"pi(d omega_n) - 2I (recorded)", literal_two_identity.to_json()},
            {"class of [D,B]", degree_one_symbol},
            {"pass", pass()}};
  }
};

/// Block shape of a represented form modulo compacts: x (x) I2 in even
/// degree, y (x) kappa in odd degree.
inline std::vector<CompactnessCertificate> sphere_shape_certificates(const SphereRep& rep, const SphereForm& f,
                                                                     const std::string& name) {
  int m = certificate_window(f.reach());
  ChainWindow w2(m, 2);
  NumericChainOperator x(represent_sphere_form(rep, f, m));
  NumericChainOperator g(chain_elementary(w2, ChainElementary::gamma));
  NumericChainOperator k(chain_elementary(w2, ChainElementary::kappa));
  const double e = f.degree() % 2 == 0 ? 1.0 : -1.0;
  return {compactness_certificate(name + ": gamma-" + (e > 0 ? "odd" : "even") + " part", x - (g * x * g).scaled(e)),
          compactness_certificate(name + ": kappa-asymmetric part", x - k * x * k)};
}

inline SphereCalculusReport sphere_calculus(const SphereParams& p, int n,
                                            const std::vector<std::pair<std::string, SphereForm>>& samples = {}) {
  SphereRep rep(p);
  SphereCalculusReport r{p, n, {}, {}, {}};
  for (const auto& [name, f] : samples) {
    auto cs = sphere_shape_certificates(rep, f, name);
    r.certificates.insert(r.certificates.end(), cs.begin(), cs.end());
  }
  const double sc = rep.table().sqrt_c().to_double();
  const double c = to_double(p.c);

  auto w = sphere_witness(p, n);
  auto dw = w.differential();
  int m = certificate_window(dw.reach());
  ChainWindow w2(m, 2);
  NumericChainOperator pw(represent_sphere_form(rep, w, m));
  NumericChainOperator pdw(represent_sphere_form(rep, dw, m));
  r.certificates.push_back(compactness_certificate("pi(omega_" + std::to_string(n) + ") compact", pw));
  auto target = shift_kappa(w2, n - 2, -2 * c * std::pow(-sc, n - 2));
  r.certificates.push_back(compactness_certificate(
      "pi(d omega_" + std::to_string(n) + ") = -2c (-sqrt c)^(n-2) l^(n-2) (x) kappa^(n-2)", pdw - target));
  NumericChainOperator id(ChainOperator::identity(w2));
  r.literal_two_identity = compactness_certificate("pi(d omega_" + std::to_string(n) + ") - 2I", pdw - id.scaled(2.0));

  auto B = SphereElement::B(p);
  int m1 = certificate_window(1);
  ChainWindow w1(m1, 2);
  NumericChainOperator db(even_triple_commutator(rep, B, m1));
  NumericChainOperator dbs(even_triple_commutator(rep, SphereElement::B_star(p), m1));
  NumericChainOperator da(even_triple_commutator(rep, SphereElement::A(p), m1));
  r.certificates.push_back(compactness_certificate("[D,A] compact", da));
  r.certificates.push_back(compactness_certificate("[D,B] = -sqrt(c) l (x) kappa", db - shift_kappa(w1, 1, -sc)));
  r.certificates.push_back(
      compactness_certificate("[D,B*] = sqrt(c) l* (x) kappa", dbs - shift_kappa(w1, 1, sc, true)));
  std::ostringstream os;
  os << "-" << rep.table().sqrt_c().str() << " z";
  r.degree_one_symbol = os.str();
  return r;
}

}  // namespace nct
