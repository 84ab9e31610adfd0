#pragma once

// The representation of A_f on l2(N) (x) l2(Z):
//
//   pi(alpha) = l sqrt(I - q^{2N}) (x) I,    pi(beta) = q^N (x) l
//
// with l the lowering shift.  The factors sqrt(1 - q^{2i}) are kept as formal
// radicals (radical id i), so relations among represented elements stay exact.
//
// BetaConvention::raising uses pi(beta) = q^N (x) l* instead.  The two are
// unitarily equivalent through j -> -j; the raising form is the one in which
// the commutator expansion against D = N (x) S + I (x) N reads
//   [D, beta] = q^N N (x) [S, l*] + beta.

#include "nct/algebra.hpp"
#include "nct/linalg.hpp"
#include "nct/truncation.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nct {

enum class BetaConvention { lowering, raising };

/// Radical id i stands for sqrt(1 - q^{2i}), i >= 1.
class Su2RadicalTable final : public RadicalTable {
 public:
  explicit Su2RadicalTable(Rational q) : q_(std::move(q)) { require_q(q_); }
  Scalar radicand(int id) const override {
    if (id < 1) throw std::out_of_range("SU_q(2) radical ids start at 1");
    return Scalar(1 - rational_pow(q_ * q_, id));
  }
  std::string symbol(int id) const override { return "r" + std::to_string(id); }
  std::string key() const override { return "su2:" + to_string(q_); }
  const Rational& q() const { return q_; }

 private:
  Rational q_;
};

class Su2Representation {
 public:
  explicit Su2Representation(Rational q, BetaConvention convention = BetaConvention::lowering)
      : q_(std::move(q)), convention_(convention), table_(std::make_shared<Su2RadicalTable>(q_)) {}

  const Rational& q() const { return q_; }
  BetaConvention convention() const { return convention_; }
  const RadicalTablePtr& table() const { return table_; }

  /// Column offset in j produced by one factor of beta.
  int beta_step() const { return convention_ == BetaConvention::lowering ? -1 : 1; }

  /// sqrt(1 - q^{2i}); zero at i = 0.
  Scalar root(int i) const {
    if (i <= 0) return {};
    return Scalar::radical(i, table_);
  }

  /// pi(c alpha_i beta^j beta*^k) applied to e_{r,s}: target site and amplitude.
  /// Returns nothing when the vector is annihilated.
  std::optional<Move> apply_monomial(const Monomial& m, int r, int s, const Rational& c = 1) const {
    const int dj = beta_step() * (m.j - m.k);
    Rational amp = c * rational_pow(q_, static_cast<long>(r) * (m.j + m.k));
    RadicalMask mask;
    if (m.i > 0) {
      if (r < m.i) return std::nullopt;  // sqrt(1 - q^0) = 0 is hit
      for (int t = r - m.i + 1; t <= r; ++t) mask = mask | RadicalMask::single(t);
    } else if (m.i < 0) {
      for (int t = r + 1; t <= r - m.i; ++t) mask = mask | RadicalMask::single(t);
    }
    return Move{-m.i, dj, Scalar::term(mask, amp, table_)};
  }

  GridOperator represent(const AlgebraElement& a, const TruncationWindow& w) const {
    require_same_q(a);
    if (w.m_row() + std::max(0, -min_alpha_power(a)) >= RadicalMask::kMaxIds)
      throw std::out_of_range("window too tall for the radical table");
    GridOperator op(w, a.shift_count(), 0);
    for (std::size_t col = 0; col < w.dim(); ++col) {
      auto site = w.site(col);
      for (const auto& [m, c] : a.terms()) {
        auto mv = apply_monomial(m, site.i, site.j, c);
        if (!mv || !w.contains(site.i + mv->di, site.j + mv->dj)) continue;
        op.add_entry(w.flat(site.i + mv->di, site.j + mv->dj, site.copy), col, mv->value);
      }
    }
    return op;
  }

  GridOperator represent(const Monomial& m, const TruncationWindow& w) const {
    return represent(AlgebraElement::monomial(q_, m), w);
  }

 private:
  void require_same_q(const AlgebraElement& a) const {
    if (a.q() != q_) throw std::invalid_argument("element and representation use different q");
  }
  static int min_alpha_power(const AlgebraElement& a) {
    int lo = 0;
    for (const auto& [m, c] : a.terms()) lo = std::min(lo, m.i);
    return lo;
  }

  Rational q_;
  BetaConvention convention_;
  RadicalTablePtr table_;
};

inline GridOperator represent(const AlgebraElement& a, const TruncationWindow& w,
                              BetaConvention convention = BetaConvention::lowering) {
  return Su2Representation(a.q(), convention).represent(a, w);
}

/// I (x) pi_0(p) with pi_0(z) = l (lowering shift on l2(Z)).
inline GridOperator represent_circle(const LaurentPoly& p, const TruncationWindow& w) {
  int reach = 0;
  for (const auto& [n, c] : p.coeffs()) reach = std::max(reach, static_cast<int>(std::abs(n)));
  return build_from_rule(w, reach, [&](int, int) {
    std::vector<Move> moves;
    for (const auto& [n, c] : p.coeffs()) moves.push_back({0, -static_cast<int>(n), Scalar(c)});
    return moves;
  });
}

/// Conjugation by U_{z,w} = z^N (x) w^N with z = i^a, w = i^b (4th roots of
/// unity).  Entry (r, c) of U* T U is i^{a (i_c - i_r) + b (j_c - j_r)} T_rc.
/// Returns the real and imaginary parts.
inline std::pair<GridOperator, GridOperator> torus_conjugate(const GridOperator& t, int a, int b) {
  const auto& w = t.space();
  GridOperator re(w, t.reach(), t.margin()), im(w, t.reach(), t.margin());
  t.for_each([&](std::size_t row, std::size_t col, const Scalar& v) {
    auto r = w.site(row);
    auto c = w.site(col);
    int phase = ((a * (c.i - r.i) + b * (c.j - r.j)) % 4 + 4) % 4;
    switch (phase) {
      case 0: re.add_entry(row, col, v); break;
      case 1: im.add_entry(row, col, v); break;
      case 2: re.add_entry(row, col, -v); break;
      case 3: im.add_entry(row, col, -v); break;
    }
  });
  return {re, im};
}

// ---------------------------------------------------------------------------
// Faithfulness probe

enum class ProbeVerdict { faithful, inconclusive };

struct ProbeResult {
  ProbeVerdict verdict;
  std::vector<std::size_t> ranks;  // per window tried
  std::size_t count;
};

namespace detail {

/// Rank of the map  coefficients -> interior matrix entries  at one window,
/// exact on formal coordinates and checked in floating point.
inline std::optional<std::size_t> representation_rank(const std::vector<AlgebraElement>& elements,
                                                      const TruncationWindow& w, BetaConvention conv) {
  std::map<std::tuple<std::size_t, std::size_t, RadicalMask>, std::size_t> coordinate;
  std::vector<linalg::Entry<Rational>> exact;
  std::vector<linalg::Entry<double>> numeric;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> entry_row;
  for (std::size_t n = 0; n < elements.size(); ++n) {
    auto op = represent(elements[n], w, conv);
    op.for_each([&](std::size_t row, std::size_t col, const Scalar& v) {
      for (const auto& t : v.terms()) {
        auto key = std::make_tuple(row, col, t.mask);
        auto [it, fresh] = coordinate.try_emplace(key, coordinate.size());
        exact.push_back({it->second, n, t.coeff});
      }
      auto [it, fresh] = entry_row.try_emplace({row, col}, entry_row.size());
      numeric.push_back({it->second, n, v.to_double()});
    });
  }
  // One column per element: collapse everything into a single block.
  std::size_t r_exact = linalg::exact_rank(exact);
  std::size_t r_float = linalg::numeric_rank(numeric);
  if (r_exact != r_float) return std::nullopt;
  return r_exact;
}

}  // namespace detail

inline ProbeResult faithfulness_probe(const std::vector<AlgebraElement>& elements, const TruncationWindow& w,
                                      BetaConvention conv = BetaConvention::lowering) {
  for (const auto& e : elements)
    if (e.is_zero()) throw std::invalid_argument("faithfulness_probe: zero element in input");
  ProbeResult result{ProbeVerdict::faithful, {}, elements.size()};
  if (elements.empty()) return result;
  for (int attempt = 0; attempt < 2; ++attempt) {
    TruncationWindow tw(w.m_row() << attempt, w.m_col() << attempt);
    auto rank = detail::representation_rank(elements, tw, conv);
    result.ranks.push_back(rank.value_or(0));
    if (rank && *rank == elements.size()) return result;
  }
  result.verdict = ProbeVerdict::inconclusive;
  return result;
}

}  // namespace nct
