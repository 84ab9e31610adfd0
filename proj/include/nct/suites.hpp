#pragma once

// Verification checks shared by the CLI `verify` verb and the acceptance
// binary.  Each check returns a named pass/fail with a JSON body; a suite is
// an ordered list of checks.  Randomized checks use fixed seeds.

#include "nct/algebra.hpp"
#include "nct/config.hpp"
#include "nct/connes.hpp"
#include "nct/dirac.hpp"
#include "nct/fredholm.hpp"
#include "nct/l2.hpp"
#include "nct/podles.hpp"
#include "nct/representation.hpp"

#include "json.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace nct {

struct Check {
  std::string name;
  bool pass = false;
  nlohmann::json detail;

  nlohmann::json to_json() const { return {{"name", name}, {"pass", pass}, {"detail", detail}}; }
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
      if (!c.pass) out.push_back(suite + ": " + c.name);
    return out;
  }
  nlohmann::json to_json() const {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : checks) cs.push_back(c.to_json());
    return {{"suite", suite}, {"pass", pass()}, {"checks", cs}};
  }
};

namespace checks {

inline constexpr unsigned kSeed = 20240607u;

/// Monomials with |i|, j, k <= r.
inline std::vector<Monomial> monomial_grid(int r) {
  std::vector<Monomial> out;
  for (int i = -r; i <= r; ++i)
    for (int j = 0; j <= r; ++j)
      for (int k = 0; k <= r; ++k) out.push_back({i, j, k});
  return out;
}

inline AlgebraElement random_element(std::mt19937& rng, const Rational& q, int terms = 3, int r = 2) {
  std::uniform_int_distribution<int> idx(-r, r), pow(0, r), num(-5, 5), den(1, 4);
  AlgebraElement a(q);
  for (int t = 0; t < terms; ++t) a.add({idx(rng), pow(rng), pow(rng)}, Rational(num(rng), den(rng)));
  return a;
}

inline Check algebra_relations(const Rational& q) {
  Check c{"defining relations normal order to zero", true, nlohmann::json::object()};
  for (const auto& [name, rel] : defining_relations(q)) {
    c.detail[name] = rel.str();
    c.pass = c.pass && rel.is_zero();
  }
  return c;
}

inline Check algebra_associativity(const Rational& q) {
  auto grid = monomial_grid(2);
  std::vector<AlgebraElement> els;
  for (const auto& m : grid) els.push_back(AlgebraElement::monomial(q, m));
  long bad = 0, tested = 0;
  for (const auto& a : els)
    for (const auto& b : els) {
      auto ab = a * b;
      for (const auto& c : els) {
        ++tested;
        if (!(ab * c == a * (b * c))) ++bad;
      }
    }
  std::mt19937 rng(kSeed);
  for (int t = 0; t < 200; ++t) {
    auto a = random_element(rng, q), b = random_element(rng, q), c = random_element(rng, q);
    ++tested;
    if (!((a * b) * c == a * (b * c))) ++bad;
  }
  return {"associativity (grid |i|,j,k <= 2 and 200 random triples)", bad == 0,
          {{"tested", tested}, {"failures", bad}}};
}

inline Check algebra_involution(const Rational& q) {
  auto grid = monomial_grid(2);
  long bad = 0, tested = 0;
  for (const auto& m1 : grid) {
    auto a = AlgebraElement::monomial(q, m1);
    if (!(a.adjoint().adjoint() == a)) ++bad;
    for (const auto& m2 : grid) {
      auto b = AlgebraElement::monomial(q, m2);
      ++tested;
      if (!((a * b).adjoint() == b.adjoint() * a.adjoint())) ++bad;
    }
  }
  std::mt19937 rng(kSeed + 1);
  for (int t = 0; t < 200; ++t) {
    auto a = random_element(rng, q), b = random_element(rng, q);
    ++tested;
    if (!((a * b).adjoint() == b.adjoint() * a.adjoint())) ++bad;
  }
  return {"involution is an antihomomorphism", bad == 0, {{"tested", tested}, {"failures", bad}}};
}

inline Check representation_fidelity(const Rational& q, const std::vector<int>& windows) {
  auto grid = monomial_grid(2);
  nlohmann::json per = nlohmann::json::object();
  bool ok = true;
  for (int m : windows) {
    TruncationWindow w(m, m);
    Su2Representation rep(q);
    std::vector<GridOperator> ops;
    std::vector<AlgebraElement> els;
    for (const auto& mon : grid) {
      els.push_back(AlgebraElement::monomial(q, mon));
      ops.push_back(rep.represent(els.back(), w));
    }
    long bad_mult = 0, bad_adj = 0;
    for (std::size_t x = 0; x < els.size(); ++x) {
      if (!interior_equal(rep.represent(els[x].adjoint(), w), ops[x].adjoint())) ++bad_adj;
      for (std::size_t y = 0; y < els.size(); ++y)
        if (!interior_equal(rep.represent(els[x] * els[y], w), ops[x] * ops[y])) ++bad_mult;
    }
    per[std::to_string(m)] = {{"pairs", els.size() * els.size()}, {"pi(ab) != pi(a)pi(b)", bad_mult},
                              {"pi(a*) != pi(a)*", bad_adj}};
    ok = ok && bad_mult == 0 && bad_adj == 0;
  }
  return {"pi(ab) = pi(a)pi(b) and pi(a*) = pi(a)* on interiors", ok, per};
}

inline Check representation_faithfulness(const Rational& q) {
  std::vector<AlgebraElement> els;
  for (const auto& m : monomial_grid(1)) els.push_back(AlgebraElement::monomial(q, m));
  auto r = faithfulness_probe(els, TruncationWindow(6, 6));
  return {"monomials |i|,j,k <= 1 are linearly independent under pi", r.verdict == ProbeVerdict::faithful,
          {{"count", r.count}, {"ranks", r.ranks}}};
}

inline Check commutator_formulas(const Rational& q, int window = 12) {
  TruncationWindow w(window, window);
  const auto spec = DiracSpec::generic();
  long bad = 0, tested = 0;
  nlohmann::json failures = nlohmann::json::array();
  for (auto conv : {BetaConvention::lowering, BetaConvention::raising}) {
    Su2Representation rep(q, conv);
    for (char letter : std::string("aAbB")) {
      ++tested;
      auto direct = matrix_commutator(spec, detail::letter_operator(rep, letter, w));
      if (!interior_equal(generator_commutator(spec, rep, letter, w), direct)) {
        ++bad;
        failures.push_back(std::string("generator ") + letter);
      }
    }
    for (const auto& m : monomial_grid(3)) {
      auto a = AlgebraElement::monomial(q, m);
      auto direct = matrix_commutator(spec, rep.represent(a, w));
      ++tested;
      try {
        commutator(spec, a, w, conv);
      } catch (const std::logic_error&) {
        ++bad;
        failures.push_back("Leibniz " + a.str());
      }
      if (!interior_equal(evaluate(symbolic_commutator(a, conv), w, conv), direct)) {
        ++bad;
        failures.push_back("four-term " + a.str());
      }
    }
  }
  return {"generator formulas and the four-term decomposition match D pi - pi D", bad == 0,
          {{"window", window}, {"tested", tested}, {"failures", failures}}};
}

inline Check boundedness(int scan = 8) {
  auto generic = boundedness_gate(DiracSpec::generic(), scan);
  DiracSpec square{"i^2", [](int i, int) { return Rational(i * i); }};
  auto bad = boundedness_gate(square, scan);
  return {"generic D passes the boundedness gate, d = i^2 fails the vertical condition",
          generic.pass() && !bad.vertical.bounded,
          {{"generic", generic.to_json()}, {"i^2", bad.to_json()}}};
}

inline Check summability(int range = 16) {
  auto mult = multiplicities(DiracSpec::generic(), range);
  bool ok = true;
  nlohmann::json mismatch = nlohmann::json::array();
  for (int n = -range; n <= range; ++n) {
    long expect = n >= 0 ? n + 1 : -n;
    long got = mult.count(Rational(n)) ? mult.at(Rational(n)) : 0;
    if (got != expect) {
      ok = false;
      mismatch.push_back({{"eigenvalue", n}, {"count", got}, {"expected", expect}});
    }
  }
  nlohmann::json profiles = nlohmann::json::object();
  for (int p : {1, 2, 3}) {
    auto s = summability_profile(DiracSpec::generic(), Rational(p), {8, 16, 32});
    profiles[std::to_string(p)] = s.to_json();
    ok = ok && s.converging == (p == 3);
  }
  return {"multiplicities n+1 / |n| and summability trend (p = 1, 2 diverge, p = 3 converges)", ok,
          {{"multiplicity_mismatches", mismatch}, {"profiles", profiles}}};
}

inline Check index_table(int m) {
  nlohmann::json rows = nlohmann::json::array();
  bool ok = true;
  auto record = [&](const ProblemBuilder& b, long expect) {
    try {
      auto r = stabilized_index(b, m);
      auto j = r.to_json();
      j["expected"] = expect;
      rows.push_back(j);
      ok = ok && r.index == expect;
    } catch (const std::exception& e) {
      rows.push_back({{"error", e.what()}, {"expected", expect}});
      ok = false;
    }
  };
  record(u_against_dirac(DiracSpec::generic()), 1);
  record(u_against_class(make_projection_class(ProjectionKind::P1, 2, {0, 1})), -1);
  record(u_against_class(make_projection_class(ProjectionKind::P2, 2, {-1})), 1);
  record(u_against_class(make_projection_class(ProjectionKind::P3, 2, {0, 1})), 0);
  record(u_against_class(make_projection_class(ProjectionKind::P4, 2, {0, 1})), 0);
  return {"index table: generic 1, P1 -1, P2 1, P3 0, P4 0", ok, rows};
}

inline Check multiplicity(int m) {
  nlohmann::json rows = nlohmann::json::array();
  bool ok = true;
  for (int k : {-3, -2, -1, 1, 2, 3}) {
    try {
      auto r = multiplicity_pairing(k, m);
      rows.push_back(r.to_json());
      ok = ok && r.index == k;
    } catch (const std::exception& e) {
      rows.push_back({{"multiplicity", k}, {"error", e.what()}});
      ok = false;
    }
  }
  return {"multiplicity pairing returns m for m in {-3..3} \\ {0}", ok, rows};
}

inline Check canonical_pairing(const Rational& q, int m = 8) {
  try {
    auto r = canonical_unitary_pairing(m, q);
    return {"canonical 2x2 unitary against sign(D) (x) I2", r.stable, r.to_json()};
  } catch (const std::exception& e) {
    return {"canonical 2x2 unitary against sign(D) (x) I2", false, {{"error", e.what()}}};
  }
}

// ---------------------------------------------------------------------------

inline Check form1_leibniz(const Rational& q) {
  auto grid = monomial_grid(2);
  long bad = 0, tested = 0;
  auto leibniz = [&](const AlgebraElement& x, const AlgebraElement& y) {
    ++tested;
    auto lhs = differential(x * y);
    auto rhs = bimodule_action(x, differential(y), Side::left) + bimodule_action(y, differential(x), Side::right);
    if (!(lhs == rhs)) ++bad;
  };
  for (const auto& m1 : grid)
    for (const auto& m2 : grid) leibniz(AlgebraElement::monomial(q, m1), AlgebraElement::monomial(q, m2));
  std::mt19937 rng(kSeed + 2);
  for (int t = 0; t < 50; ++t) leibniz(random_element(rng, q), random_element(rng, q));
  long mismatch = 0;
  for (const auto& m : grid) {
    auto a = AlgebraElement::monomial(q, m);
    auto d = differential(a);
    auto sc = symbolic_commutator(a);
    if (!(d.free_part() == sc.s_coeff && d.ideal_part() == sc.plain)) ++mismatch;
  }
  return {"Form1 Leibniz rule d(xy) = x dy + dx y, and d agrees with the commutator classes",
          bad == 0 && mismatch == 0, {{"tested", tested}, {"leibniz_failures", bad}, {"class_mismatches", mismatch}}};
}

inline Check universal_leibniz(const Rational& q) {
  TruncationWindow w(10, 10);
  const auto spec = DiracSpec::generic();
  long bad = 0, tested = 0;
  for (const auto& m1 : monomial_grid(1))
    for (const auto& m2 : monomial_grid(1)) {
      auto a = AlgebraElement::monomial(q, m1), b = AlgebraElement::monomial(q, m2);
      auto f = UniversalForm::d(a * b) - UniversalForm::d(a) * b - a * UniversalForm::d(b);
      ++tested;
      auto op = represent_form(f, spec, w);
      if (!interior_equal(op, GridOperator(w).with_margin(op.margin()))) ++bad;
    }
  return {"pi(d(ab) - da b - a db) = 0 on the interior", bad == 0, {{"tested", tested}, {"failures", bad}}};
}

inline Check mod_compacts_samples(const Rational& q) {
  const auto a = AlgebraElement::alpha(q), as = AlgebraElement::alpha_star(q), b = AlgebraElement::beta(q),
             bs = AlgebraElement::beta_star(q);
  std::vector<std::pair<std::string, UniversalForm>> samples{
      {"d alpha", UniversalForm::d(a)},
      {"d beta", UniversalForm::d(b)},
      {"alpha d beta d beta*", a * UniversalForm::d(b) * UniversalForm::d(bs)},
      {"d alpha* d beta alpha", UniversalForm::d(as) * UniversalForm::d(b) * a},
      {"beta d alpha d alpha* d beta*", b * UniversalForm::d(a) * UniversalForm::d(as) * UniversalForm::d(bs)}};
  nlohmann::json rows = nlohmann::json::object();
  bool ok = true;
  for (const auto& [name, f] : samples) {
    auto cls = classify_mod_compacts(f);
    rows[name] = cls.to_json();
    ok = ok && cls.parity_ok && cls.certificate.pass;
  }
  return {"psi(Omega^n) = S^n A_f + S^{n+1} I_beta on samples", ok, rows};
}

inline Check vanishing(const Rational& q) {
  nlohmann::json rows = nlohmann::json::object();
  bool ok = true;
  for (int n : {2, 3}) {
    auto r = higher_form_vanishing_check(n, q);
    rows[std::to_string(n)] = r.to_json();
    ok = ok && r.pass();
  }
  return {"higher-form vanishing certificates (n = 2, 3)", ok, rows};
}

inline Check tech_lemma(const Rational& q) {
  const auto I = AlgebraElement::identity(q), a = AlgebraElement::alpha(q), zero = AlgebraElement(q);
  auto s1 = tech_lemma_probe(I, zero);
  auto s2 = tech_lemma_probe(zero, zero);
  auto s3 = tech_lemma_probe(a, Rational(-1) * a);
  bool ok = s1.verdict == SeparationVerdict::separated && s2.verdict == SeparationVerdict::null_pair &&
            s3.verdict == SeparationVerdict::separated;
  return {"a (I(x)S) + b is not compact unless a = b = 0", ok,
          {{"(I, 0)", s1.to_json()}, {"(0, 0)", s2.to_json()}, {"(alpha, -alpha)", s3.to_json()}}};
}

// ---------------------------------------------------------------------------

inline CircleForm random_circle_form(std::mt19937& rng, int k, int terms = 4) {
  std::uniform_int_distribution<int> n(-3, 3), num(-4, 4), den(1, 3);
  CircleForm w(k);
  for (int t = 0; t < terms; ++t) {
    CircleForm::Index idx;
    for (int s = 0; s <= k; ++s) idx.push_back(n(rng));
    w.add(idx, Rational(num(rng), den(rng)));
  }
  return w;
}

inline Check l2_relations() {
  std::mt19937 rng(kSeed + 3);
  std::uniform_int_distribution<int> deg(1, 3), n(-4, 4), nz(1, 4), sgn(0, 1);
  long bad = 0;
  for (int t = 0; t < 20; ++t) {
    int k = deg(rng);
    CircleForm::Index idx;
    for (int s = 0; s <= k; ++s) idx.push_back(n(rng));
    long r = n(rng);
    if (r == -1) r = 2;
    int k2 = std::max(k, 2);
    if (!kernel_membership(kernel_relation_shift(idx))) ++bad;
    if (!kernel_membership(kernel_relation_differential(r, k))) ++bad;
    if (!kernel_membership(kernel_relation_primitive(r, k2))) ++bad;
  }
  bool printed_outside = !kernel_membership(kernel_relation_unshifted(3, 2));
  return {"z dz relations lie in the null space", bad == 0 && printed_outside,
          {{"trials", 20}, {"failures", bad}, {"unshifted variant outside the kernel", printed_outside}}};
}

inline Check l2_inner_product_psd() {
  std::mt19937 rng(kSeed + 4);
  long bad = 0;
  for (int t = 0; t < 100; ++t) {
    auto w = random_circle_form(rng, 1 + t % 3);
    if (t % 10 == 0) w = kernel_relation_shift({1, 2, -1});
    auto v = l2_inner_product(w, w);
    if (v < 0 || ((v == 0) != kernel_membership(w))) ++bad;
  }
  return {"(w, w) >= 0 with equality exactly on the null space", bad == 0, {{"forms", 100}, {"failures", bad}}};
}

inline Check l2_differentials(const Rational& q) {
  long bad = 0;
  for (long n = -6; n <= 6; ++n) {
    auto p = LaurentPoly::monomial(n);
    auto d = l2_differential_circle(p);
    if (!(d.coeff(n) == n && (n == 0 ? d.is_zero() : d.coeffs().size() == 1))) ++bad;
    // the class of dz^n in Omega~^1 is its aggregate
    if (!(CircleForm::term({n}).differential().aggregate().coeffs() == d.coeffs())) ++bad;
  }
  long mode_mismatch = 0;
  for (const auto& m : monomial_grid(3)) {
    auto a = AlgebraElement::monomial(q, m);
    auto lit = l2_differential_suq2(a, L2Mode::literal);
    auto quo = l2_differential_suq2(a, L2Mode::quotiented);
    if (!m.in_ideal()) {
      if (!(lit.coeffs() == quo.coeffs())) ++mode_mismatch;
      if (!(lit.coeff(m.i) == -m.i)) ++mode_mismatch;
    }
  }
  auto ab = AlgebraElement::alpha(q) * AlgebraElement::beta(q);
  bool ab_split = l2_differential_suq2(ab, L2Mode::literal).coeff(1) == -1 &&
                  l2_differential_suq2(ab, L2Mode::quotiented).is_zero();
  return {"d(z^n) = n z^n; both SU_q(2) modes agree on j = k = 0", bad == 0 && mode_mismatch == 0 && ab_split,
          {{"circle_failures", bad}, {"mode_mismatches", mode_mismatch}, {"alpha beta literal/quotiented split", ab_split}}};
}

inline Check l2_vanishing() {
  std::mt19937 rng(kSeed + 5);
  long bad = 0;
  for (int t = 0; t < 30; ++t) {
    auto w = random_circle_form(rng, 2 + t % 2);
    auto eta = vanishing_primitive(w);
    if (!kernel_membership(eta) || !kernel_membership(w - eta.differential())) ++bad;
  }
  return {"every form of degree >= 2 lies in K_k + d K_{k-1}", bad == 0, {{"forms", 30}, {"failures", bad}}};
}

inline Check l2_pushforward(const Rational& q) {
  const auto a = AlgebraElement::alpha(q), as = AlgebraElement::alpha_star(q), b = AlgebraElement::beta(q);
  std::vector<std::tuple<std::string, UniversalForm, Rational>> samples{
      {"d alpha", UniversalForm::d(a), 1},
      {"d beta", UniversalForm::d(b), 0},
      {"alpha d alpha*", a * UniversalForm::d(as), 1},
      {"d(alpha beta) alpha + beta d alpha*", UniversalForm::d(a * b) * a + b * UniversalForm::d(as), 0}};
  nlohmann::json rows = nlohmann::json::object();
  bool ok = true;
  for (const auto& [name, f, expect] : samples) {
    auto r = sigma_pushforward_check(f);
    auto j = r.to_json();
    j["expected"] = to_string(expect);
    rows[name] = j;
    ok = ok && r.pass() && r.rhs == expect;
  }
  return {"(w, w)_D = (sigma(w), sigma(w))_D0 and the I_beta discrepancy decays", ok, rows};
}

// ---------------------------------------------------------------------------

inline Check sphere_algebra(const SphereParams& p, int m = 12) {
  nlohmann::json rel = nlohmann::json::object();
  bool ok = true;
  for (const auto& [name, e] : sphere_relations(p)) {
    rel[name] = e.str();
    ok = ok && e.is_zero();
  }
  SphereRep rep(p);
  ChainWindow w(m);
  std::vector<SphereElement> basis;
  for (int a = 0; a <= 2; ++a)
    for (int n = -2; n <= 2; ++n) basis.push_back(SphereElement::monomial(p, a, n));
  long bad = 0;
  for (const auto& x : basis)
    for (const auto& y : basis)
      for (int s : {1, -1}) {
        auto prod = rep.represent(x, s, w) * rep.represent(y, s, w);
        if (!interior_equal(rep.represent(x * y, s, w), prod)) ++bad;
        if (!interior_equal(rep.represent(x.adjoint(), s, w), rep.represent(x, s, w).adjoint())) ++bad;
      }
  for (const auto& [name, e] : sphere_relations(p))
    for (int s : {1, -1})
      if (!interior_equal(rep.represent(e, s, w), ChainOperator(w))) ++bad;
  bool c0 = rep.table().c_value(1, 0).is_zero() && rep.table().c_value(-1, 0).is_zero();
  bool positive = true;
  for (int n = 1; n <= m; ++n)
    positive = positive && rep.table().c_value(1, n).to_double() > 0 && rep.table().c_value(-1, n).to_double() > 0;
  ChainWindow w2(m, 2);
  auto g = chain_elementary(w2, ChainElementary::gamma);
  auto d = chain_elementary(w2, ChainElementary::dirac);
  bool even = interior_equal(g * d + d * g, ChainOperator(w2));
  for (const auto& x : basis) {
    auto px = rep.represent_pair(x, w2);
    even = even && interior_equal(g * px, px * g);
  }
  return {"sphere relations exact, c(0) = 0, pi_+- multiplicative, triple even",
          ok && bad == 0 && c0 && positive && even,
          {{"params", p.str()}, {"relations", rel}, {"representation_failures", bad}, {"c(0) = 0", c0},
           {"c(n) > 0", positive}, {"even", even}}};
}

inline Check sphere_bounded(const SphereParams& p) {
  auto r = sphere_boundedness_certificates(p);
  return {"sphere boundedness certificates (i)-(iii)", r.pass(), r.to_json()};
}

inline Check sphere_index(int m) {
  const char* name = "sphere index pairing with P0 = -1";
  try {
    auto p0 = sphere_index_pairing(m, SphereProjection::p0);
    auto p0v = sphere_index_pairing(m, SphereProjection::p0, 1);
    auto zero = sphere_index_pairing(m, SphereProjection::zero);
    auto two = sphere_index_pairing(m, SphereProjection::rank_two);
    bool ok = p0.index == -1 && p0v.index == -1 && zero.index == 0;
    return {name, ok,
            {{"P0", p0.to_json()}, {"P0, phase e0 -> e0", p0v.to_json()}, {"0", zero.to_json()},
             {"rank two", two.to_json()}}};
  } catch (const std::exception& e) {
    return {name, false, {{"error", e.what()}}};
  }
}

inline Check sphere_forms(const SphereParams& p) {
  const auto A = SphereElement::A(p), B = SphereElement::B(p), Bs = SphereElement::B_star(p);
  std::vector<std::pair<std::string, SphereForm>> samples{
      {"A", SphereForm::element(A)},
      {"dB", SphereForm::d(B)},
      {"A dB dB*", SphereForm::element(A) * SphereForm::d(B) * SphereForm::d(Bs)},
      {"B* dA dB dB", SphereForm::element(Bs) * SphereForm::d(A) * SphereForm::d(B) * SphereForm::d(B)}};
  nlohmann::json rows = nlohmann::json::object();
  bool ok = true;
  for (int n : {2, 3}) {
    auto r = sphere_calculus(p, n, n == 2 ? samples : std::vector<std::pair<std::string, SphereForm>>{});
    rows[std::to_string(n)] = r.to_json();
    ok = ok && r.pass();
  }
  return {"sphere forms: block shape mod compacts and the vanishing witnesses", ok, rows};
}

}  // namespace checks

/// Runs one named suite.
inline SuiteReport run_suite(const std::string& name, const Config& cfg) {
  SuiteReport r{name, {}};
  const Rational& q = cfg.q;
  if (name == "algebra") {
    r.checks = {checks::algebra_relations(q), checks::algebra_associativity(q), checks::algebra_involution(q)};
  } else if (name == "representation") {
    r.checks = {checks::representation_fidelity(q, cfg.windows), checks::representation_faithfulness(q)};
  } else if (name == "dirac") {
    r.checks = {checks::commutator_formulas(q), checks::boundedness(), checks::summability()};
  } else if (name == "fredholm") {
    r.checks = {checks::index_table(cfg.index_window), checks::multiplicity(cfg.index_window),
                checks::canonical_pairing(q)};
  } else if (name == "calculus") {
    r.checks = {checks::form1_leibniz(q), checks::universal_leibniz(q), checks::mod_compacts_samples(q),
                checks::vanishing(q), checks::tech_lemma(q)};
  } else if (name == "l2") {
    r.checks = {checks::l2_relations(), checks::l2_inner_product_psd(), checks::l2_differentials(q),
                checks::l2_vanishing(), checks::l2_pushforward(q)};
  } else if (name == "sphere") {
    SphereParams p(q, cfg.c);
    r.checks = {checks::sphere_algebra(p), checks::sphere_bounded(p), checks::sphere_index(cfg.index_window),
                checks::sphere_forms(p)};
  } else {
    throw ConfigError("unknown suite '" + name + "'");
  }
  return r;
}

}  // namespace nct
