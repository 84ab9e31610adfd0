#include "nct/connes.hpp"

#include "catch_amalgamated.hpp"

#include <random>

using namespace nct;

namespace {

const Rational q(1, 2);
const auto a = AlgebraElement::alpha(q);
const auto as = AlgebraElement::alpha_star(q);
const auto b = AlgebraElement::beta(q);
const auto bs = AlgebraElement::beta_star(q);
const auto I = AlgebraElement::identity(q);
const auto zero = AlgebraElement(q);

GridOperator sign_s(const TruncationWindow& w) {
  return GridOperator::diagonal(w, [&](std::size_t k) { return Scalar(w.site(k).j >= 0 ? 1 : -1); });
}

bool is_zero_on_interior(const GridOperator& op) { return interior_equal(op, GridOperator(op.space()).with_margin(op.margin())); }

std::vector<Monomial> grid(int r) {
  std::vector<Monomial> out;
  for (int i = -r; i <= r; ++i)
    for (int j = 0; j <= r; ++j)
      for (int k = 0; k <= r; ++k) out.push_back({i, j, k});
  return out;
}

}  // namespace

TEST_CASE("symbolic commutator examples") {
  auto sa = symbolic_commutator(a, BetaConvention::raising);
  CHECK(sa.s_coeff == -a);
  CHECK(sa.plain.is_zero());
  CHECK(sa.tail.empty());

  auto sb = symbolic_commutator(b, BetaConvention::raising);
  CHECK(sb.s_coeff.is_zero());
  CHECK(sb.plain == b);
  REQUIRE(sb.tail.size() == 1);
  CHECK(sb.tail[0].coeff == 2);
  CHECK(sb.tail[0].z_index == 0);
  CHECK(sb.tail[0].kind == 'C');
  CHECK(sb.tail[0].p == 1);

  // lowering: beta lowers j, so the plain part flips sign
  auto lb = symbolic_commutator(b);
  CHECK(lb.plain == -b);

  auto si = symbolic_commutator(I);
  CHECK((si.s_coeff.is_zero() && si.plain.is_zero() && si.tail.empty()));
}

TEST_CASE("four-term decomposition matches matrix commutators") {
  TruncationWindow w(10, 10);
  const auto spec = DiracSpec::generic();
  for (auto conv : {BetaConvention::lowering, BetaConvention::raising}) {
    Su2Representation rep(q, conv);
    for (const auto& m : grid(2)) {
      auto x = AlgebraElement::monomial(q, m);
      INFO(x.str());
      REQUIRE(interior_equal(evaluate(symbolic_commutator(x, conv), w, conv),
                             matrix_commutator(spec, rep.represent(x, w))));
    }
  }
}

TEST_CASE("Form1 examples") {
  const auto r = BetaConvention::raising;
  CHECK(differential(a, r) == Form1(-a, zero));
  CHECK(differential(b, r) == Form1(zero, b));
  CHECK(differential(I, r) == Form1(zero, zero));
  CHECK(differential(a * b, r) == Form1(-(a * b), a * b));
  CHECK(bimodule_action(a, differential(b, r), Side::left) == Form1(zero, a * b));
  CHECK(bimodule_action(bs, differential(b, r), Side::right) == Form1(zero, b * bs));
  CHECK(bimodule_action(I, differential(a * b, r), Side::left) == differential(a * b, r));
  CHECK_THROWS(Form1(zero, a));
}

TEST_CASE("Form1 Leibniz rule on random elements") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> idx(-2, 2), pw(0, 2), num(-4, 4);
  auto random = [&] {
    AlgebraElement x(q);
    for (int t = 0; t < 3; ++t) x.add({idx(rng), pw(rng), pw(rng)}, Rational(num(rng), 2));
    return x;
  };
  for (auto conv : {BetaConvention::lowering, BetaConvention::raising})
    for (int t = 0; t < 40; ++t) {
      auto x = random(), y = random();
      REQUIRE(differential(x * y, conv) == bimodule_action(x, differential(y, conv), Side::left) +
                                               bimodule_action(y, differential(x, conv), Side::right));
    }
}

TEST_CASE("universal forms") {
  auto w = a * UniversalForm::d(b) * UniversalForm::d(bs);
  CHECK(w.degree() == 2);
  CHECK(w.differential().differential().is_empty());
  // graded Leibniz: d(uv) = du v + (-1)^{deg u} u dv
  auto u = b * UniversalForm::d(a);
  auto v = as * UniversalForm::d(bs);
  // forms are word lists; compare their images
  TruncationWindow win(8, 8);
  const auto spec = DiracSpec::generic();
  auto same = [&](const UniversalForm& x, const UniversalForm& y) {
    return is_zero_on_interior(represent_form(x - y, spec, win));
  };
  CHECK(same((u * v).differential(), u.differential() * v - u * v.differential()));
  CHECK(UniversalForm::d(I).is_empty());
  CHECK(same(UniversalForm::d(a + b), UniversalForm::d(a) + UniversalForm::d(b)));
  CHECK_FALSE(same(UniversalForm::d(a), UniversalForm::d(b)));
}

TEST_CASE("represent_form examples") {
  TruncationWindow w(8, 8);
  const auto spec = DiracSpec::generic();
  auto pa = represent(a, w);
  CHECK(interior_equal(represent_form(UniversalForm::element(a), spec, w), pa));
  // alpha d(alpha) = -pi(alpha^2) (I (x) S)
  auto lhs = represent_form(a * UniversalForm::d(a), spec, w);
  CHECK(interior_equal(lhs, (represent(a * a, w) * sign_s(w)).scaled(Scalar(-1))));
  // d(beta) d(beta*) against a product of matrix commutators
  auto db = matrix_commutator(spec, represent(b, w));
  auto dbs = matrix_commutator(spec, represent(bs, w));
  CHECK(interior_equal(represent_form(UniversalForm::d(b) * UniversalForm::d(bs), spec, w), db * dbs));
  // pi(d(xy) - dx y - x dy) = 0
  for (const auto& m1 : grid(1))
    for (const auto& m2 : grid(1)) {
      auto x = AlgebraElement::monomial(q, m1), y = AlgebraElement::monomial(q, m2);
      auto f = UniversalForm::d(x * y) - UniversalForm::d(x) * y - x * UniversalForm::d(y);
      REQUIRE(is_zero_on_interior(represent_form(f, spec, w)));
    }
}

TEST_CASE("classification modulo compacts") {
  auto da = classify_mod_compacts(UniversalForm::d(a));
  CHECK(da.parts.plain.is_zero());
  CHECK(da.parts.s_part == -a);
  CHECK(da.certificate.pass);
  auto db = classify_mod_compacts(UniversalForm::d(b), BetaConvention::raising);
  CHECK(db.parts.plain == b);
  CHECK(db.parts.s_part.is_zero());
  CHECK(db.parity_ok);
  CHECK(db.certificate.pass);
  CHECK(classify_mod_compacts(a * UniversalForm::d(I)).parts.is_zero());
  auto two = classify_mod_compacts(UniversalForm::d(a) * UniversalForm::d(b) * as);
  CHECK(two.parity_ok);
  CHECK(two.certificate.pass);
}

TEST_CASE("Calkin sign form and its negative control") {
  const auto w = calkin_sign_form(q);
  const CalkinClass minus_s(zero, -I), plus_s(zero, I), none(q);
  CHECK(psi_class(w) == minus_s);
  CHECK(calkin_certificate("psi(omega) + S", w, minus_s).pass);
  CHECK(calkin_certificate("psi(d omega)", w.differential(), none).pass);
  CHECK_FALSE(calkin_certificate("psi(omega) - S", w, plus_s).pass);
}

TEST_CASE("omega_k and the witnesses") {
  for (auto conv : {BetaConvention::lowering, BetaConvention::raising}) {
    const int e = convention_sign(conv);
    for (int k : {1, -1}) {
      auto ak = k > 0 ? a : as;
      CHECK(psi_class(omega_k(q, k), conv).is_zero());
      CHECK(psi_class(omega_k(q, k).differential(), conv) == CalkinClass(ak, zero));
    }
    CHECK(psi_class(witness_alpha_beta(q).differential(), conv) == CalkinClass(zero, Rational(-e) * (a * b)));
    CHECK(psi_class(witness_alpha_star_beta(q).differential(), conv) == CalkinClass(zero, Rational(e) * (as * b)));
  }
  CHECK(psi_class(kernel_form_with_differential(q, 2).differential()) == CalkinClass(I, zero));
  CHECK(psi_class(kernel_form_with_differential(q, 3).differential()) == CalkinClass(zero, I));
}

TEST_CASE("higher-form vanishing at n = 2") {
  for (auto conv : {BetaConvention::lowering, BetaConvention::raising}) {
    auto r = higher_form_vanishing_check(2, q, conv);
    CHECK(r.pass());
    CHECK(r.certificates.size() >= 10);
  }
  CHECK_THROWS(higher_form_vanishing_check(1, q));
}

TEST_CASE("a (I (x) S) + b separation probe") {
  CHECK(tech_lemma_probe(I, zero).verdict == SeparationVerdict::separated);
  CHECK(tech_lemma_probe(zero, zero).verdict == SeparationVerdict::null_pair);
  CHECK(tech_lemma_probe(a, -a).verdict == SeparationVerdict::separated);
  CHECK(tech_lemma_probe(zero, b * bs).verdict == SeparationVerdict::separated);
}
