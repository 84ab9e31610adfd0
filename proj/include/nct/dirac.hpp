#pragma once

// Equivariant Dirac operators D e_{ij} = d_{ij} e_{ij} and the audits run on
// their eigenvalue tables.  Asymptotic conditions (O(1), O(i+1), p-summable)
// cannot be decided from finite data; they are replaced by trend
// certificates over three doubling scans, and every report says so.

#include "nct/algebra.hpp"
#include "nct/representation.hpp"
#include "nct/truncation.hpp"

#include "json.hpp"

#include <cmath>
#include <functional>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nct {

struct DiracSpec {
  std::string name;
  std::function<Rational(int, int)> rule;

  Rational operator()(int i, int j) const { return rule(i, j); }

  /// D = N (x) S + I (x) N:  d_ij = i sgn+(j) + j, sgn+(j) = +1 for j >= 0.
  static DiracSpec generic() {
    return {"generic", [](int i, int j) { return Rational(j >= 0 ? i + j : j - i); }};
  }
  static DiracSpec constant(const Rational& v, std::string name = "") {
    if (name.empty()) name = "constant(" + to_string(v) + ")";
    return {std::move(name), [v](int, int) { return v; }};
  }
  DiracSpec negated() const {
    auto r = rule;
    return {"-" + name, [r](int i, int j) { return Rational(-r(i, j)); }};
  }
};

/// Reads `i,j,value` rows (value may be p/q); other sites use `fallback`.
/// Blank lines, lines starting with '#', and a leading header row are skipped.
inline DiracSpec dirac_from_csv(std::istream& in, const DiracSpec& fallback, std::string name = "csv") {
  auto table = std::make_shared<std::map<std::pair<int, int>, Rational>>();
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto text = detail::trim(line);
    if (text.empty() || text[0] == '#') continue;
    std::replace(text.begin(), text.end(), ',', ' ');
    std::istringstream ls(text);
    std::string si, sj, sv;
    if (!(ls >> si >> sj >> sv)) throw std::invalid_argument("csv line " + std::to_string(line_no) + ": expected i,j,value");
    int i = 0, j = 0;
    try {
      i = std::stoi(si);
      j = std::stoi(sj);
    } catch (const std::exception&) {
      if (line_no == 1) continue;  // header
      throw std::invalid_argument("csv line " + std::to_string(line_no) + ": bad index");
    }
    if (i < 0) throw std::invalid_argument("csv line " + std::to_string(line_no) + ": i must be >= 0");
    (*table)[{i, j}] = parse_rational(sv);
  }
  auto base = fallback.rule;
  return {std::move(name), [table, base](int i, int j) {
            auto it = table->find({i, j});
            return it == table->end() ? base(i, j) : it->second;
          }};
}

/// sign with the convention sign(0) = +1.
inline int sign_plus(const Rational& v) { return v >= 0 ? 1 : -1; }

inline GridOperator dirac_operator(const DiracSpec& spec, const TruncationWindow& w) {
  return GridOperator::diagonal(w, [&](std::size_t k) {
    auto s = w.site(k);
    return Scalar(spec(s.i, s.j));
  });
}

/// (I + sign D) / 2.
inline GridOperator sign_projection(const DiracSpec& spec, const TruncationWindow& w) {
  return GridOperator::diagonal(w, [&](std::size_t k) {
    auto s = w.site(k);
    return Scalar(sign_plus(spec(s.i, s.j)) > 0 ? 1 : 0);
  });
}

// ---------------------------------------------------------------------------
// Trend certificates

/// A profile over scans s, 2s, 4s is bounded when its increments contract by
/// a factor of at most 3/4 (or stop growing).  Growth like s, log s or sqrt s
/// fails; convergent profiles pass.
inline bool bounded_trend(const std::vector<Rational>& p) {
  if (p.size() != 3) throw std::invalid_argument("trend needs exactly three profile values");
  Rational inc1 = p[1] - p[0];
  Rational inc2 = p[2] - p[1];
  if (inc2 <= 0) return true;
  return inc1 > 0 && 4 * inc2 <= 3 * inc1;
}

struct TrendCertificate {
  std::string quantity;
  std::vector<int> scans;
  std::vector<Rational> profile;
  std::vector<std::pair<int, int>> argmax;  // site attaining the max per scan
  bool bounded = false;

  std::string witness() const {
    std::ostringstream os;
    for (std::size_t n = 0; n < scans.size(); ++n) {
      if (n) os << ", ";
      os << "scan " << scans[n] << ": " << profile[n] << " at (" << argmax[n].first << "," << argmax[n].second
         << ")";
    }
    return os.str();
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["quantity"] = quantity;
    j["scans"] = scans;
    std::vector<std::string> exact;
    std::vector<double> approx;
    for (const auto& v : profile) {
      exact.push_back(to_string(v));
      approx.push_back(to_double(v));
    }
    j["profile"] = exact;
    j["profile_float"] = approx;
    j["bounded"] = bounded;
    if (!bounded) j["witness"] = witness();
    return j;
  }
};

namespace detail {

/// max over sites of value(i, j) for the sites enumerated by `region(s)`.
inline TrendCertificate trend(const std::string& quantity, int scan,
                              const std::function<void(int, const std::function<void(int, int)>&)>& region,
                              const std::function<Rational(int, int)>& value) {
  if (scan < 8) throw std::invalid_argument("scan must be >= 8");
  TrendCertificate cert;
  cert.quantity = quantity;
  for (int s : {scan, 2 * scan, 4 * scan}) {
    Rational best = 0;
    std::pair<int, int> at{0, 0};
    bool first = true;
    region(s, [&](int i, int j) {
      Rational v = value(i, j);
      if (first || v > best) {
        best = v;
        at = {i, j};
        first = false;
      }
    });
    cert.scans.push_back(s);
    cert.profile.push_back(best);
    cert.argmax.push_back(at);
  }
  cert.bounded = bounded_trend(cert.profile);
  return cert;
}

inline Rational abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }

}  // namespace detail

struct BoundednessReport {
  TrendCertificate vertical;    // |d_{i-1,j} - d_ij|
  TrendCertificate horizontal;  // |d_{i,j-1} - d_ij| / (i+1)
  bool pass() const { return vertical.bounded && horizontal.bounded; }

  nlohmann::json to_json() const {
    return {{"kind", "finite-evidence certificate (not a proof)"},
            {"pass", pass()},
            {"vertical_difference", vertical.to_json()},
            {"horizontal_difference_over_i_plus_1", horizontal.to_json()}};
  }
};

/// Bounded commutators need |d_{i-1,j} - d_ij| = O(1) and
/// |d_{i,j-1} - d_ij| = O(i+1).
inline BoundednessReport boundedness_gate(const DiracSpec& spec, int scan) {
  BoundednessReport r;
  r.vertical = detail::trend(
      "max |d(i-1,j) - d(i,j)|", scan,
      [](int s, const std::function<void(int, int)>& f) {
        for (int i = 1; i <= s; ++i)
          for (int j = -s; j <= s; ++j) f(i, j);
      },
      [&](int i, int j) { return detail::abs(spec(i - 1, j) - spec(i, j)); });
  r.horizontal = detail::trend(
      "max |d(i,j-1) - d(i,j)| / (i+1)", scan,
      [](int s, const std::function<void(int, int)>& f) {
        for (int i = 0; i <= s; ++i)
          for (int j = -s + 1; j <= s; ++j) f(i, j);
      },
      [&](int i, int j) { return Rational(detail::abs(spec(i, j - 1) - spec(i, j)) / (i + 1)); });
  return r;
}

/// d_ij = O(i + |j| + 1).
inline TrendCertificate growth_audit(const DiracSpec& spec, int scan) {
  return detail::trend(
      "max |d(i,j)| / (i+|j|+1)", scan,
      [](int s, const std::function<void(int, int)>& f) {
        for (int i = 0; i <= s; ++i)
          for (int j = -s; j <= s; ++j) f(i, j);
      },
      [&](int i, int j) { return Rational(detail::abs(spec(i, j)) / (i + std::abs(j) + 1)); });
}

// ---------------------------------------------------------------------------
// Commutators

/// [D, pi(alpha)] and [D, pi(beta)] from the matrix-element formulas
///   [D, alpha] e_ij = (d_{i-1,j} - d_ij) sqrt(1 - q^{2i}) e_{i-1,j}
///   [D, beta]  e_ij = (d_{i,j'} - d_ij) q^i e_{i,j'}
/// with j' = j -+ 1 by beta convention, and the adjoint letters through
/// [D, x*] = -[D, x]*.
inline GridOperator generator_commutator(const DiracSpec& spec, const Su2Representation& rep, char letter,
                                         const TruncationWindow& w) {
  auto alpha = [&] {
    return build_from_rule(w, 1, [&](int i, int j) {
      std::vector<Move> out;
      if (i >= 1) out.push_back({-1, 0, rep.root(i) * Scalar(spec(i - 1, j) - spec(i, j))});
      return out;
    });
  };
  auto beta = [&] {
    const int step = rep.beta_step();
    return build_from_rule(w, 1, [&](int i, int j) {
      return std::vector<Move>{{0, step, Scalar((spec(i, j + step) - spec(i, j)) * rational_pow(rep.q(), i))}};
    });
  };
  switch (letter) {
    case 'a': return alpha();
    case 'A': return -alpha().adjoint();
    case 'b': return beta();
    case 'B': return -beta().adjoint();
    default: throw std::invalid_argument(std::string("unknown generator letter '") + letter + "'");
  }
}

namespace detail {

/// Letters of alpha_i beta^j beta*^k:  a = alpha, A = alpha*, b = beta, B = beta*.
inline std::string monomial_word(const Monomial& m) {
  std::string w(static_cast<std::size_t>(std::abs(m.i)), m.i >= 0 ? 'a' : 'A');
  w.append(static_cast<std::size_t>(m.j), 'b');
  w.append(static_cast<std::size_t>(m.k), 'B');
  return w;
}

inline GridOperator letter_operator(const Su2Representation& rep, char letter, const TruncationWindow& w) {
  const auto& q = rep.q();
  switch (letter) {
    case 'a': return rep.represent(AlgebraElement::alpha(q), w);
    case 'A': return rep.represent(AlgebraElement::alpha_star(q), w);
    case 'b': return rep.represent(AlgebraElement::beta(q), w);
    case 'B': return rep.represent(AlgebraElement::beta_star(q), w);
    default: throw std::invalid_argument("unknown generator letter");
  }
}

}  // namespace detail

/// D pi(a) - pi(a) D computed from the matrices.
inline GridOperator matrix_commutator(const DiracSpec& spec, const GridOperator& pa) {
  auto d = dirac_operator(spec, pa.space());
  return d * pa - pa * d;
}

/// [D, pi(a)] assembled by the Leibniz rule over the letters of each
/// monomial from the generator formulas.  Checked against D pi(a) - pi(a) D
/// on the interior; a mismatch throws std::logic_error.
inline GridOperator commutator(const DiracSpec& spec, const AlgebraElement& a, const TruncationWindow& w,
                               BetaConvention convention = BetaConvention::lowering) {
  Su2Representation rep(a.q(), convention);
  std::map<char, GridOperator> letters, brackets;
  for (char c : std::string("aAbB")) {
    letters.emplace(c, detail::letter_operator(rep, c, w));
    brackets.emplace(c, generator_commutator(spec, rep, c, w));
  }
  GridOperator total(w);
  for (const auto& [m, coeff] : a.terms()) {
    auto word = detail::monomial_word(m);
    for (std::size_t t = 0; t < word.size(); ++t) {
      GridOperator term = brackets.at(word[t]);
      for (std::size_t u = t; u-- > 0;) term = letters.at(word[u]) * term;
      for (std::size_t u = t + 1; u < word.size(); ++u) term = term * letters.at(word[u]);
      total = total + term.scaled(Scalar(coeff));
    }
  }
  auto direct = matrix_commutator(spec, rep.represent(a, w));
  if (!interior_equal(total, direct))
    throw std::logic_error("commutator: Leibniz expansion disagrees with D pi(a) - pi(a) D");
  return total;
}

// ---------------------------------------------------------------------------
// Spectrum

/// Eigenvalue -> multiplicity over 0 <= i <= m, |j| <= m.
inline std::map<Rational, long> multiplicities(const DiracSpec& spec, int m) {
  std::map<Rational, long> out;
  for (int i = 0; i <= m; ++i)
    for (int j = -m; j <= m; ++j) ++out[spec(i, j)];
  return out;
}

struct SummabilityProfile {
  Rational p;
  std::vector<int> lambdas;
  std::vector<double> partial_sums;
  bool converging = false;

  nlohmann::json to_json() const {
    return {{"kind", "finite-evidence certificate (not a proof)"},
            {"p", to_string(p)},
            {"lambdas", lambdas},
            {"partial_sums", partial_sums},
            {"trend", converging ? "converging" : "diverging"}};
  }
};

/// Partial sums of |d_ij|^{-p} over 0 < |d_ij| <= Lambda, for sites in the
/// scan region 0 <= i <= L, |j| <= L with L the largest Lambda.  The trend
/// is read from the last three sums: converging iff increments contract by
/// at least 3/4.
inline SummabilityProfile summability_profile(const DiracSpec& spec, const Rational& p, std::vector<int> lambdas) {
  if (p <= 0) throw std::invalid_argument("p must be positive");
  if (lambdas.empty()) throw std::invalid_argument("lambda list is empty");
  std::sort(lambdas.begin(), lambdas.end());
  if (lambdas.front() < 1) throw std::invalid_argument("lambda values must be >= 1");
  const int region = lambdas.back();
  const double exponent = to_double(p);
  std::vector<std::pair<double, double>> values;  // (|d|, |d|^{-p})
  for (int i = 0; i <= region; ++i)
    for (int j = -region; j <= region; ++j) {
      double d = std::abs(to_double(spec(i, j)));
      if (d > 0) values.emplace_back(d, std::pow(d, -exponent));
    }
  if (values.empty()) throw std::invalid_argument("spec has no nonzero eigenvalue in the scan region");
  std::sort(values.begin(), values.end());
  SummabilityProfile out{p, lambdas, {}, false};
  for (int lambda : lambdas) {
    double sum = 0.0;
    for (const auto& [d, w] : values) {
      if (d > lambda) break;
      sum += w;
    }
    out.partial_sums.push_back(sum);
  }
  if (out.partial_sums.size() >= 3) {
    auto n = out.partial_sums.size();
    double inc1 = out.partial_sums[n - 2] - out.partial_sums[n - 3];
    double inc2 = out.partial_sums[n - 1] - out.partial_sums[n - 2];
    out.converging = inc2 <= 0 || (inc1 > 0 && 4 * inc2 <= 3 * inc1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sign structure

enum class ProjectionKind { P1, P2, P3, P4, other };

inline std::string to_string(ProjectionKind k) {
  switch (k) {
    case ProjectionKind::P1: return "P1";
    case ProjectionKind::P2: return "P2";
    case ProjectionKind::P3: return "P3";
    case ProjectionKind::P4: return "P4";
    default: return "other";
  }
}

/// P1 = cols j <= -M plus E;  P2 = cols j >= M plus E;  P3 = cols in E;
/// P4 = cols outside E.  E is a subset of {-M+1, ..., M-1}.
struct SignProjectionClass {
  ProjectionKind kind = ProjectionKind::other;
  std::set<int> exceptional;
  int cutoff = 1;
  std::vector<std::pair<int, int>> sign_exceptions;  // finitely many sites off their column's sign

  bool contains_column(int j) const {
    bool in_e = exceptional.count(j) > 0;
    switch (kind) {
      case ProjectionKind::P1: return j <= -cutoff || in_e;
      case ProjectionKind::P2: return j >= cutoff || in_e;
      case ProjectionKind::P3: return in_e;
      case ProjectionKind::P4: return !in_e;
      default: throw std::logic_error("projection of an unclassified sign pattern");
    }
  }

  nlohmann::json to_json() const {
    nlohmann::json exc = nlohmann::json::array();
    for (auto [i, j] : sign_exceptions) exc.push_back({i, j});
    return {{"kind", to_string(kind)},
            {"M", cutoff},
            {"E", std::vector<int>(exceptional.begin(), exceptional.end())},
            {"sign_exceptions", exc}};
  }
};

inline SignProjectionClass make_projection_class(ProjectionKind kind, int cutoff, std::set<int> e) {
  if (cutoff < 1) throw std::invalid_argument("M must be >= 1");
  for (int j : e)
    if (std::abs(j) >= cutoff) throw std::invalid_argument("E must lie in {-M+1, ..., M-1}");
  return {kind, std::move(e), cutoff, {}};
}

/// Eventual sign of each column (constant over scan/2 <= i <= scan), then the
/// least M at which the columns j >= M and j <= -M are each of one sign.
/// Sites with smaller i whose sign differs are recorded as exceptions.
inline SignProjectionClass classify_sign_projection(const DiracSpec& spec, int scan) {
  if (scan < 8) throw std::invalid_argument("scan must be >= 8");
  std::map<int, int> column_sign;
  SignProjectionClass out;
  for (int j = -scan; j <= scan; ++j) {
    int s = sign_plus(spec(scan, j));
    for (int i = scan / 2; i <= scan; ++i)
      if (sign_plus(spec(i, j)) != s)
        throw std::runtime_error("inconclusive: column " + std::to_string(j) + " has no stable sign within the scan");
    for (int i = 0; i < scan / 2; ++i)
      if (sign_plus(spec(i, j)) != s) out.sign_exceptions.emplace_back(i, j);
    column_sign[j] = s;
  }
  auto uniform = [&](int from, int to) {
    for (int j = from; j <= to; ++j)
      if (column_sign[j] != column_sign[from]) return false;
    return true;
  };
  int m = 1;
  while (m <= scan / 2 && !(uniform(m, scan) && uniform(-scan, -m))) ++m;
  if (m > scan / 2) throw std::runtime_error("inconclusive: no stable sign at large |j| within the scan");
  out.cutoff = m;
  const int up = column_sign[m];
  const int down = column_sign[-m];
  if (up > 0 && down < 0) out.kind = ProjectionKind::P2;
  else if (up < 0 && down > 0) out.kind = ProjectionKind::P1;
  else if (up < 0 && down < 0) out.kind = ProjectionKind::P3;
  else out.kind = ProjectionKind::P4;
  for (int j = -m + 1; j <= m - 1; ++j) {
    bool positive = column_sign[j] > 0;
    if (out.kind == ProjectionKind::P4 ? !positive : positive) out.exceptional.insert(j);
  }
  return out;
}

/// Diagonal 0/1 projection onto the columns selected by the class.
inline GridOperator projection_from_class(const SignProjectionClass& cls, const TruncationWindow& w) {
  return GridOperator::diagonal(w, [&](std::size_t k) { return Scalar(cls.contains_column(w.site(k).j) ? 1 : 0); });
}

}  // namespace nct
