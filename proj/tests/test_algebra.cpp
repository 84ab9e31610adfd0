#include "nct/algebra.hpp"

#include "catch_amalgamated.hpp"

#include <map>
#include <random>
#include <string>

using namespace nct;

namespace {

// Independent normalizer on words over a (alpha), A (alpha*), b (beta),
// B (beta*).  Rewrites the leftmost reducible pair until the word reads
// a^n or A^n, then b^j, then B^k.
using WordPoly = std::map<std::string, Rational>;

int rank(char c) { return c == 'a' || c == 'A' ? 0 : c == 'b' ? 1 : 2; }

void add(WordPoly& p, const std::string& w, const Rational& c) {
  if (c == 0) return;
  auto& v = p[w];
  v += c;
  if (v == 0) p.erase(w);
}

WordPoly normalize(const std::string& word, const Rational& q) {
  WordPoly done, todo{{word, 1}};
  while (!todo.empty()) {
    auto [w, c] = *todo.begin();
    todo.erase(todo.begin());
    std::size_t pos = std::string::npos;
    for (std::size_t t = 0; t + 1 < w.size(); ++t) {
      char x = w[t], y = w[t + 1];
      if (rank(x) > rank(y) || (x == 'a' && y == 'A') || (x == 'A' && y == 'a')) {
        pos = t;
        break;
      }
    }
    if (pos == std::string::npos) {
      add(done, w, c);
      continue;
    }
    auto head = w.substr(0, pos), tail = w.substr(pos + 2);
    std::string pair = w.substr(pos, 2);
    const Rational qi = Rational(1) / q;
    if (pair == "ba") add(todo, head + "ab" + tail, c * qi);        // a b = q b a
    else if (pair == "Ba") add(todo, head + "aB" + tail, c * qi);   // a b* = q b* a
    else if (pair == "bA") add(todo, head + "Ab" + tail, c * q);    // b a* = q a* b
    else if (pair == "BA") add(todo, head + "AB" + tail, c * q);    // b* a* = q a* b*
    else if (pair == "Bb") add(todo, head + "bB" + tail, c);
    else if (pair == "Aa") {                                         // a* a = I - b* b
      add(todo, head + tail, c);
      add(todo, head + "bB" + tail, -c);
    } else if (pair == "aA") {                                       // a a* = I - q^2 b b*
      add(todo, head + tail, c);
      add(todo, head + "bB" + tail, -c * q * q);
    }
  }
  return done;
}

std::string word_of(const Monomial& m) {
  return std::string(static_cast<std::size_t>(std::abs(m.i)), m.i >= 0 ? 'a' : 'A') +
         std::string(static_cast<std::size_t>(m.j), 'b') + std::string(static_cast<std::size_t>(m.k), 'B');
}

Monomial monomial_of(const std::string& w) {
  Monomial m;
  for (char c : w) {
    if (c == 'a') ++m.i;
    if (c == 'A') --m.i;
    if (c == 'b') ++m.j;
    if (c == 'B') ++m.k;
  }
  return m;
}

AlgebraElement from_words(const WordPoly& p, const Rational& q) {
  AlgebraElement out(q);
  for (const auto& [w, c] : p) out.add(monomial_of(w), c);
  return out;
}

std::vector<Monomial> grid(int r) {
  std::vector<Monomial> out;
  for (int i = -r; i <= r; ++i)
    for (int j = 0; j <= r; ++j)
      for (int k = 0; k <= r; ++k) out.push_back({i, j, k});
  return out;
}

}  // namespace

TEST_CASE("products from the table match word rewriting on the grid") {
  const Rational q(1, 2);
  long checked = 0;
  for (const auto& m1 : grid(2))
    for (const auto& m2 : grid(2)) {
      auto lhs = AlgebraElement::monomial(q, m1) * AlgebraElement::monomial(q, m2);
      auto rhs = from_words(normalize(word_of(m1) + word_of(m2), q), q);
      REQUIRE(lhs == rhs);
      ++checked;
    }
  CHECK(checked == 45 * 45);
}

TEST_CASE("word rewriting agrees at another q") {
  const Rational q(3, 7);
  for (const auto& m1 : grid(1))
    for (const auto& m2 : grid(2)) {
      auto lhs = AlgebraElement::monomial(q, m1) * AlgebraElement::monomial(q, m2);
      REQUIRE(lhs == from_words(normalize(word_of(m1) + word_of(m2), q), q));
    }
}

TEST_CASE("normal-ordering examples") {
  const Rational q(1, 2);
  const auto a = AlgebraElement::alpha(q), as = AlgebraElement::alpha_star(q), b = AlgebraElement::beta(q),
             bs = AlgebraElement::beta_star(q), I = AlgebraElement::identity(q);
  CHECK(a * as == I - Rational(1, 4) * AlgebraElement::monomial(q, {0, 1, 1}));
  CHECK(b * a == AlgebraElement::monomial(q, {1, 1, 0}, 2));
  CHECK(as * a == I - AlgebraElement::monomial(q, {0, 1, 1}));
  // b* a* = q a* b*, from a b = q b a
  CHECK((a * b).adjoint() == AlgebraElement::monomial(q, {-1, 0, 1}, Rational(1, 2)));
  CHECK(I.adjoint() == I);
  CHECK(as * a + bs * b == I);
}

TEST_CASE("defining relations reduce to zero") {
  for (const auto& q : {Rational(1, 2), Rational(9, 10), Rational(1, 3)})
    for (const auto& [name, rel] : defining_relations(q)) {
      INFO(name);
      CHECK(rel.is_zero());
    }
}

TEST_CASE("associativity, unit and involution on random elements") {
  const Rational q(1, 2);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> idx(-2, 2), pw(0, 2), num(-5, 5);
  auto random = [&] {
    AlgebraElement x(q);
    for (int t = 0; t < 3; ++t) x.add({idx(rng), pw(rng), pw(rng)}, Rational(num(rng), 3));
    return x;
  };
  const auto I = AlgebraElement::identity(q);
  for (int t = 0; t < 100; ++t) {
    auto x = random(), y = random(), z = random();
    REQUIRE((x * y) * z == x * (y * z));
    REQUIRE(I * x == x);
    REQUIRE(x * I == x);
    REQUIRE(x.adjoint().adjoint() == x);
    REQUIRE((x * y).adjoint() == y.adjoint() * x.adjoint());
    REQUIRE((x + y).adjoint() == x.adjoint() + y.adjoint());
  }
}

TEST_CASE("haar state") {
  const Rational q(1, 2);
  CHECK(AlgebraElement::identity(q).haar_state() == 1);
  // (1 - q^2) sum_i q^{4i} = 1 / (1 + q^2)
  CHECK((AlgebraElement::beta(q) * AlgebraElement::beta_star(q)).haar_state() == Rational(4, 5));
  CHECK(AlgebraElement::alpha(q).haar_state() == 0);
  CHECK(AlgebraElement::beta(q).haar_state() == 0);
}

TEST_CASE("ideal membership and symbol") {
  const Rational q(1, 2);
  const auto a = AlgebraElement::alpha(q), b = AlgebraElement::beta(q), as = AlgebraElement::alpha_star(q);
  CHECK(b.in_ideal_beta());
  CHECK_FALSE((a + b).in_ideal_beta());
  CHECK((a * b - b * a).in_ideal_beta());
  CHECK((a * a).symbol() == LaurentPoly::monomial(2));
  CHECK((AlgebraElement::beta_star(q) * b).symbol().is_zero());
  CHECK((as * a).symbol() == LaurentPoly::monomial(0));
  // symbol is multiplicative
  for (const auto& m1 : grid(1))
    for (const auto& m2 : grid(1)) {
      auto x = AlgebraElement::monomial(q, m1), y = AlgebraElement::monomial(q, m2);
      REQUIRE((x * y).symbol() == x.symbol() * y.symbol());
    }
}

TEST_CASE("parse and print round trip") {
  const Rational q(1, 2);
  auto x = AlgebraElement::monomial(q, {-2, 1, 3}, Rational(-3, 4)) + AlgebraElement::alpha(q);
  CHECK(AlgebraElement::parse(x.str(), q) == x);
}

TEST_CASE("mixing q values is rejected") {
  CHECK_THROWS(AlgebraElement::alpha(Rational(1, 2)) * AlgebraElement::alpha(Rational(1, 3)));
}
