#include "nct/representation.hpp"

#include "catch_amalgamated.hpp"

#include <cmath>
#include <random>

using namespace nct;

namespace {

std::vector<Monomial> grid(int r) {
  std::vector<Monomial> out;
  for (int i = -r; i <= r; ++i)
    for (int j = 0; j <= r; ++j)
      for (int k = 0; k <= r; ++k) out.push_back({i, j, k});
  return out;
}

// Dense entry of a letter operator from the closed form:
//   alpha e_ij = sqrt(1 - q^{2i}) e_{i-1,j},  beta e_ij = q^i e_{i,j-1}.
double letter_entry(char letter, double q, int ri, int rj, int ci, int cj) {
  switch (letter) {
    case 'a': return ri == ci - 1 && rj == cj ? std::sqrt(1 - std::pow(q, 2 * ci)) : 0.0;
    case 'A': return ri == ci + 1 && rj == cj ? std::sqrt(1 - std::pow(q, 2 * ri)) : 0.0;
    case 'b': return ri == ci && rj == cj - 1 ? std::pow(q, ci) : 0.0;
    case 'B': return ri == ci && rj == cj + 1 ? std::pow(q, ci) : 0.0;
  }
  return 0.0;
}

AlgebraElement letter_element(char c, const Rational& q) {
  switch (c) {
    case 'a': return AlgebraElement::alpha(q);
    case 'A': return AlgebraElement::alpha_star(q);
    case 'b': return AlgebraElement::beta(q);
    default: return AlgebraElement::beta_star(q);
  }
}

}  // namespace

TEST_CASE("letter operators match the closed-form entries") {
  const Rational q(1, 2);
  TruncationWindow w(5, 5);
  Su2Representation rep(q);
  for (char letter : std::string("aAbB")) {
    auto op = rep.represent(letter_element(letter, q), w);
    for (std::size_t r = 0; r < w.dim(); ++r)
      for (std::size_t c = 0; c < w.dim(); ++c) {
        auto rs = w.site(r), cs = w.site(c);
        INFO(letter << " row " << w.describe(r) << " col " << w.describe(c));
        REQUIRE(std::abs(op.entry(r, c).to_double() - letter_entry(letter, 0.5, rs.i, rs.j, cs.i, cs.j)) < 1e-14);
      }
  }
}

TEST_CASE("representation examples") {
  const Rational q(1, 2);
  TruncationWindow w(4, 4);
  auto beta = represent(AlgebraElement::beta(q), w);
  auto v = beta.entry(w.flat(2, -1), w.flat(2, 0));
  REQUIRE(v.is_rational());
  CHECK(v.rational_value() == Rational(1, 4));
  CHECK(interior_equal(represent(AlgebraElement::identity(q), w), GridOperator::identity(w)));
  auto alpha = represent(AlgebraElement::alpha(q), w);
  for (int j = -4; j <= 4; ++j)
    for (std::size_t r = 0; r < w.dim(); ++r) CHECK(alpha.entry(r, w.flat(0, j)).to_double() == 0.0);
}

TEST_CASE("words of letter operators equal the normal-ordered image") {
  const Rational q(1, 2);
  TruncationWindow w(10, 10);
  Su2Representation rep(q);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> len(1, 5), pick(0, 3);
  const std::string letters = "aAbB";
  for (int t = 0; t < 40; ++t) {
    int n = len(rng);
    std::string word;
    for (int s = 0; s < n; ++s) word += letters[static_cast<std::size_t>(pick(rng))];
    auto elem = AlgebraElement::identity(q);
    auto op = GridOperator::identity(w);
    for (char c : word) {
      elem = elem * letter_element(c, q);
      op = op * rep.represent(letter_element(c, q), w);
    }
    INFO(word);
    REQUIRE(interior_equal(rep.represent(elem, w), op));
  }
}

TEST_CASE("defining relations vanish under pi") {
  for (auto conv : {BetaConvention::lowering, BetaConvention::raising}) {
    const Rational q(3, 4);
    TruncationWindow w(8, 8);
    Su2Representation rep(q, conv);
    for (const auto& [name, rel] : defining_relations(q)) {
      INFO(name);
      auto img = rep.represent(rel, w);
      CHECK(interior_equal(img, GridOperator(w).with_margin(img.margin())));
    }
  }
}

TEST_CASE("pi is a *-homomorphism on the grid") {
  const Rational q(1, 2);
  TruncationWindow w(8, 8);
  Su2Representation rep(q);
  for (const auto& m1 : grid(1))
    for (const auto& m2 : grid(2)) {
      auto x = AlgebraElement::monomial(q, m1), y = AlgebraElement::monomial(q, m2);
      REQUIRE(interior_equal(rep.represent(x * y, w), rep.represent(x, w) * rep.represent(y, w)));
      REQUIRE(interior_equal(rep.represent(y.adjoint(), w), rep.represent(y, w).adjoint()));
    }
}

TEST_CASE("circle representation") {
  TruncationWindow w(1, 6);
  auto z = represent_circle(LaurentPoly::monomial(1), w);
  auto zi = represent_circle(LaurentPoly::monomial(-1), w);
  CHECK(interior_equal(z * zi, GridOperator::identity(w).with_margin(1)));
  CHECK(interior_equal(represent_circle(LaurentPoly::monomial(0), w), GridOperator::identity(w)));
  auto v = z.entry(w.flat(0, 2), w.flat(0, 3));
  CHECK(v.is_rational());
  CHECK(v.rational_value() == 1);
}

TEST_CASE("faithfulness probe") {
  const Rational q(1, 2);
  TruncationWindow w(6, 6);
  auto r = faithfulness_probe({AlgebraElement::alpha(q), AlgebraElement::beta(q), AlgebraElement::identity(q)}, w);
  CHECK(r.verdict == ProbeVerdict::faithful);
  const auto b = AlgebraElement::beta(q);
  CHECK_THROWS(faithfulness_probe({b - b}, w));
  CHECK(faithfulness_probe({}, w).verdict == ProbeVerdict::faithful);
}
