#include "nct/l2.hpp"

#include "catch_amalgamated.hpp"

#include <random>

using namespace nct;

namespace {

// Independent aggregate: z^{n0} dz^{n1} ... dz^{nk} contributes
// c n1 ... nk at z^{n0 + ... + nk}.
std::map<long, Rational> aggregate_oracle(const CircleForm& w) {
  std::map<long, Rational> out;
  for (const auto& [n, c] : w.terms()) {
    Rational v = c;
    long total = 0;
    for (std::size_t t = 0; t < n.size(); ++t) {
      total += n[t];
      if (t) v *= n[t];
    }
    out[total] += v;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Rational norm_oracle(const CircleForm& w) {
  Rational s = 0;
  for (const auto& [n, c] : aggregate_oracle(w)) s += c * c;
  return s;
}

CircleForm random_form(std::mt19937& rng, int k) {
  std::uniform_int_distribution<int> n(-3, 3), num(-4, 4);
  CircleForm w(k);
  for (int t = 0; t < 4; ++t) {
    CircleForm::Index idx;
    for (int s = 0; s <= k; ++s) idx.push_back(n(rng));
    w.add(idx, Rational(num(rng), 2));
  }
  return w;
}

CircleForm dz() { return CircleForm::term({0, 1}); }

}  // namespace

TEST_CASE("inner product examples") {
  CHECK(l2_inner_product(dz(), dz()) == 1);
  CHECK(l2_inner_product(CircleForm::term({1, 1}), dz()) == 0);
  CHECK(l2_inner_product(CircleForm(1), dz()) == 0);
  CHECK_FALSE(kernel_membership(dz()));
}

TEST_CASE("aggregate, norm and operator route agree with the oracle") {
  std::mt19937 rng(5);
  for (int t = 0; t < 60; ++t) {
    auto w = random_form(rng, 1 + t % 3);
    INFO(w.str());
    REQUIRE(w.aggregate().coeffs() == aggregate_oracle(w));
    REQUIRE(l2_inner_product(w, w) == norm_oracle(w));
    REQUIRE(circle_operator_norm_squared(w) == norm_oracle(w));
    REQUIRE(l2_inner_product(w, w) >= 0);
    REQUIRE((l2_inner_product(w, w) == 0) == kernel_membership(w));
  }
}

TEST_CASE("kernel relations") {
  for (const auto& n : std::vector<CircleForm::Index>{{2, 3}, {-1, 2, -3}, {0, 1, 1, 4}, {5, -2, 0}})
    CHECK(kernel_membership(kernel_relation_shift(n)));
  for (long r : {-3L, -1L, 1L, 2L, 5L})
    for (int k : {1, 2, 3}) {
      CHECK(kernel_membership(kernel_relation_differential(r, k)));
      CHECK_FALSE(kernel_membership(kernel_relation_unshifted(r, k)));
    }
  for (long r : {-3L, 0L, 2L})
    for (int k : {2, 3}) CHECK(kernel_membership(kernel_relation_primitive(r, k)));
  CHECK_THROWS(kernel_relation_primitive(-1, 2));
  CHECK_THROWS(kernel_relation_primitive(1, 1));
}

TEST_CASE("module structure is compatible with the aggregate") {
  std::mt19937 rng(8);
  for (int t = 0; t < 30; ++t) {
    auto w = random_form(rng, 1 + t % 2);
    for (long m : {-2L, 1L, 3L}) {
      auto shift = LaurentPoly::monomial(m);
      REQUIRE(w.times_left(m).aggregate() == shift * w.aggregate());
      REQUIRE(w.times_right(m).aggregate() == shift * w.aggregate());
    }
    // d^2 = 0
    REQUIRE(w.differential().differential().is_zero());
  }
}

TEST_CASE("vanishing primitive") {
  std::mt19937 rng(9);
  for (int t = 0; t < 30; ++t) {
    auto w = random_form(rng, 2 + t % 2);
    auto eta = vanishing_primitive(w);
    REQUIRE(eta.degree() == w.degree() - 1);
    REQUIRE(kernel_membership(eta));
    REQUIRE(kernel_membership(w - eta.differential()));
  }
  CHECK_THROWS(vanishing_primitive(dz()));
}

TEST_CASE("circle differential") {
  CHECK(l2_differential_circle(LaurentPoly::monomial(3)) == LaurentPoly::monomial(3, 3));
  CHECK(l2_differential_circle(LaurentPoly::monomial(0)).is_zero());
  CHECK(l2_differential_circle(LaurentPoly::monomial(-2)) == LaurentPoly::monomial(-2, -2));
}

TEST_CASE("SU_q(2) differential modes") {
  const Rational q(1, 2);
  const auto a = AlgebraElement::alpha(q), b = AlgebraElement::beta(q), as = AlgebraElement::alpha_star(q);
  for (auto mode : {L2Mode::literal, L2Mode::quotiented}) {
    CHECK(l2_differential_suq2(a, mode) == LaurentPoly::monomial(1, -1));
    CHECK(l2_differential_suq2(as * as, mode) == LaurentPoly::monomial(-2, 2));
    CHECK(l2_differential_suq2(AlgebraElement::identity(q), mode).is_zero());
  }
  CHECK(l2_differential_suq2(a * b, L2Mode::literal) == LaurentPoly::monomial(1, -1));
  CHECK(l2_differential_suq2(a * b, L2Mode::quotiented).is_zero());
}

TEST_CASE("sigma pushforward") {
  const Rational q(1, 2);
  const auto a = AlgebraElement::alpha(q), as = AlgebraElement::alpha_star(q), b = AlgebraElement::beta(q);
  auto da = sigma_pushforward_check(UniversalForm::d(a));
  CHECK(da.sigma == dz());
  CHECK(da.lhs == 1);
  CHECK(da.rhs == 1);
  CHECK(da.pass());
  auto db = sigma_pushforward_check(UniversalForm::d(b));
  CHECK(db.sigma.is_zero());
  CHECK(db.lhs == 0);
  CHECK(db.pass());
  auto ad = sigma_pushforward_check(a * UniversalForm::d(as));
  CHECK(ad.sigma == CircleForm::term({1, -1}));
  CHECK(ad.rhs == 1);
  CHECK(ad.pass());
  auto two = sigma_pushforward_check(UniversalForm::d(a) * as * UniversalForm::d(a * a));
  CHECK(two.rhs == 4);
  CHECK(two.pass());
}

TEST_CASE("lift and sigma are inverse on circle forms") {
  const Rational q(1, 2);
  std::mt19937 rng(12);
  for (int t = 0; t < 20; ++t) {
    auto w = random_form(rng, 1 + t % 2);
    REQUIRE(sigma_form(lift_form(w, q)) == w);
  }
}
