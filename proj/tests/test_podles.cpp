#include "nct/podles.hpp"

#include "catch_amalgamated.hpp"

#include <cmath>
#include <random>

using namespace nct;

namespace {

bool is_zero_on_interior(const ChainOperator& op) {
  return interior_equal(op, ChainOperator(op.space()).with_margin(op.margin()));
}

// Closed-form entries of pi_sign(A) and pi_sign(B) in double precision.
struct SphereOracle {
  double q, c;
  double lambda(int sign) const { return 0.5 + sign * std::sqrt(c + 0.25); }
  double a(int sign, int n) const { return lambda(sign) * std::pow(q, 2 * n); }
  double cn(int sign, int n) const { return a(sign, n) - a(sign, n) * a(sign, n) + c; }
};

std::vector<SphereParams> params_list() { return {SphereParams(Rational(1, 2), 2), SphereParams(Rational(3, 4), Rational(1, 10))}; }

}  // namespace

TEST_CASE("sphere products") {
  SphereParams p(Rational(1, 2), 2);
  const auto A = SphereElement::A(p), B = SphereElement::B(p), Bs = SphereElement::B_star(p),
             I = SphereElement::identity(p);
  CHECK(B * A == Rational(1, 4) * SphereElement::monomial(p, 1, 1));
  CHECK(Bs * B == A - A * A + Rational(2) * I);
  CHECK(B * Bs == Rational(1, 4) * A - Rational(1, 16) * (A * A) + Rational(2) * I);
  CHECK(I * B == B);
  CHECK(B.adjoint() == Bs);
}

TEST_CASE("sphere relations and associativity") {
  for (const auto& p : params_list()) {
    for (const auto& [name, rel] : sphere_relations(p)) {
      INFO(p.str() << " " << name);
      CHECK(rel.is_zero());
    }
    std::vector<SphereElement> basis;
    for (int m = 0; m <= 2; ++m)
      for (int n = -2; n <= 2; ++n) basis.push_back(SphereElement::monomial(p, m, n));
    for (const auto& x : basis)
      for (const auto& y : basis)
        for (const auto& z : basis) REQUIRE((x * y) * z == x * (y * z));
    for (const auto& x : basis)
      for (const auto& y : basis) REQUIRE((x * y).adjoint() == y.adjoint() * x.adjoint());
  }
}

TEST_CASE("c(0) = 0 and c(n) > 0") {
  for (const auto& p : params_list()) {
    SphereRep rep(p);
    CHECK(rep.table().c_value(1, 0).is_zero());
    CHECK(rep.table().c_value(-1, 0).is_zero());
    SphereOracle o{to_double(p.q), to_double(p.c)};
    for (int n = 1; n <= 20; ++n)
      for (int s : {1, -1}) {
        REQUIRE(rep.table().c_value(s, n).to_double() > 0);
        REQUIRE(rep.table().c_value(s, n).to_double() == Catch::Approx(o.cn(s, n)).epsilon(1e-12));
      }
  }
}

TEST_CASE("lambda at c = 2") {
  SphereParams p(Rational(1, 2), 2);
  SphereRep rep(p);
  auto lp = rep.table().lambda(1), lm = rep.table().lambda(-1);
  CHECK((lp.is_rational() && lp.rational_value() == 2));
  CHECK((lm.is_rational() && lm.rational_value() == -1));
  ChainWindow w(6);
  auto a = rep.represent(SphereElement::A(p), 1, w);
  auto e = a.entry(w.flat(0), w.flat(0));
  CHECK((e.is_rational() && e.rational_value() == 2));
}

TEST_CASE("representations match the closed form") {
  for (const auto& p : params_list()) {
    SphereRep rep(p);
    SphereOracle o{to_double(p.q), to_double(p.c)};
    ChainWindow w(8);
    for (int s : {1, -1}) {
      auto a = rep.represent(SphereElement::A(p), s, w);
      auto b = rep.represent(SphereElement::B(p), s, w);
      for (int r = 0; r <= 8; ++r)
        for (int c = 0; c <= 8; ++c) {
          double av = r == c ? o.a(s, c) : 0.0;
          double bv = r == c - 1 ? std::sqrt(o.cn(s, c)) : 0.0;
          REQUIRE(a.entry(w.flat(r), w.flat(c)).to_double() == Catch::Approx(av).margin(1e-13));
          REQUIRE(b.entry(w.flat(r), w.flat(c)).to_double() == Catch::Approx(bv).margin(1e-13));
        }
    }
  }
}

TEST_CASE("pi_+- are *-homomorphisms and kill the relations") {
  for (const auto& p : params_list()) {
    SphereRep rep(p);
    ChainWindow w(10);
    std::vector<SphereElement> basis;
    for (int m = 0; m <= 2; ++m)
      for (int n = -2; n <= 2; ++n) basis.push_back(SphereElement::monomial(p, m, n));
    for (int s : {1, -1}) {
      for (const auto& [name, rel] : sphere_relations(p)) REQUIRE(is_zero_on_interior(rep.represent(rel, s, w)));
      for (const auto& x : basis) {
        REQUIRE(interior_equal(rep.represent(x.adjoint(), s, w), rep.represent(x, s, w).adjoint()));
        for (const auto& y : basis)
          REQUIRE(interior_equal(rep.represent(x * y, s, w), rep.represent(x, s, w) * rep.represent(y, s, w)));
      }
    }
  }
}

TEST_CASE("the triple is even") {
  SphereParams p(Rational(1, 2), 2);
  SphereRep rep(p);
  ChainWindow w2(8, 2);
  auto g = chain_elementary(w2, ChainElementary::gamma);
  auto d = chain_elementary(w2, ChainElementary::dirac);
  CHECK(is_zero_on_interior(g * d + d * g));
  for (const auto& x : {SphereElement::A(p), SphereElement::B(p), SphereElement::B_star(p)}) {
    auto px = rep.represent_pair(x, w2);
    CHECK(interior_equal(g * px, px * g));
    auto comm = even_triple_commutator(rep, x, 8);
    CHECK(is_zero_on_interior(g * comm + comm * g));
  }
  CHECK(is_zero_on_interior(even_triple_commutator(rep, SphereElement::identity(p), 8)));
}

TEST_CASE("boundedness certificates") {
  for (const auto& p : params_list()) {
    auto r = sphere_boundedness_certificates(p);
    INFO(p.str());
    CHECK(r.a_times_n.bounded);
    CHECK(r.root_deviation.bounded);
    CHECK(r.raising_shift_identity);
    CHECK(r.lowering_shift_identity);
  }
  CHECK(sphere_boundedness_certificates(SphereParams(Rational(9, 10), Rational(1, 10))).pass());
}

TEST_CASE("sphere index pairing") {
  CHECK(sphere_index_pairing(12).index == -1);
  CHECK(sphere_index_pairing(12, SphereProjection::p0, 1).index == -1);
  CHECK(sphere_index_pairing(12, SphereProjection::zero).index == 0);
  auto two = sphere_index_pairing(12, SphereProjection::rank_two);
  CHECK(two.stable);
  CHECK(two.index == 0);
  CHECK(sphere_index_pairing(12, SphereProjection::rank_two, 1).index == 0);
}

TEST_CASE("sphere calculus") {
  SphereParams p(Rational(1, 2), 2);
  for (int n : {2, 3}) {
    auto r = sphere_calculus(p, n, {{"dB", SphereForm::d(SphereElement::B(p))}});
    INFO(r.to_json().dump(2));
    CHECK(r.pass());
    // pi(d omega_n) is not 2I modulo compacts: it carries the factor -2c
    CHECK_FALSE(r.literal_two_identity.pass);
  }
  CHECK(SphereForm::d(SphereElement::identity(p)).words().empty());
}
