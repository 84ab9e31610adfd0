#pragma once

// Index pairings <[u], (A, H, D)> = index P u P computed on truncation
// windows.  A compression K = P u P restricted to range(P) is truncated to a
// window; columns and rows closer to the truncation edge than the guard band
// are excluded from the counts:
//
//   dim ker   = #interior columns - rank K[:, interior columns]
//   dim coker = #interior rows    - rank K[interior rows, :]
//
// Entries within the window are exact, so the counts equal those of the
// infinite operator once the window contains the finitely many defect
// vectors.  Every index is computed at two windows and must agree.

#include "nct/dirac.hpp"
#include "nct/representation.hpp"
#include "nct/truncation.hpp"

#include "json.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nct {

struct CompressionProblem {
  std::string label;
  GridOperator unitary;
  GridOperator projection;  // diagonal 0/1
  int guard = 1;

  const TruncationWindow& window() const { return unitary.space(); }
};

struct RankCertificate {
  std::size_t rank = 0;
  std::string method;  // "exact" or "float+structural"
};

/// Exact rank for rational entries; otherwise float SVD rank, which must
/// match the structural rank.
inline RankCertificate certified_rank(const std::vector<linalg::Entry<Scalar>>& entries) {
  bool rational = true;
  for (const auto& e : entries) rational = rational && e.value.is_rational();
  if (rational) {
    std::vector<linalg::Entry<Rational>> ex;
    ex.reserve(entries.size());
    for (const auto& e : entries) ex.push_back({e.row, e.col, e.value.rational_value()});
    return {linalg::exact_rank(ex), "exact"};
  }
  std::vector<linalg::Entry<double>> fl;
  fl.reserve(entries.size());
  for (const auto& e : entries) fl.push_back({e.row, e.col, e.value.to_double()});
  auto numeric = linalg::numeric_rank(fl);
  auto structural = linalg::structural_rank(fl);
  if (numeric != structural)
    throw std::runtime_error("inconclusive: float rank " + std::to_string(numeric) + " differs from structural rank " +
                             std::to_string(structural));
  return {numeric, "float+structural"};
}

struct WindowIndex {
  int m_row = 0;
  int m_col = 0;
  std::size_t kernel = 0;
  std::size_t cokernel = 0;
  std::string method;
  long index() const { return static_cast<long>(kernel) - static_cast<long>(cokernel); }
};

inline void require_projection(const GridOperator& p) {
  bool ok = true;
  p.for_each([&](std::size_t r, std::size_t c, const Scalar& v) {
    ok = ok && r == c && v.is_rational() && v.rational_value() == 1;
  });
  if (!ok) throw std::invalid_argument("projection must be diagonal with 0/1 entries");
}

/// dim ker - dim coker of P u P on range(P) at one window.
inline WindowIndex window_index(const CompressionProblem& problem) {
  require_projection(problem.projection);
  const auto& w = problem.window();
  const auto& u = problem.unitary;
  std::vector<char> in_range(w.dim(), 0);
  problem.projection.for_each([&](std::size_t r, std::size_t, const Scalar&) { in_range[r] = 1; });
  auto interior = [&](std::size_t k) { return in_range[k] && w.distance_to_edge(k) >= problem.guard; };

  std::vector<linalg::Entry<Scalar>> by_cols, by_rows;
  std::size_t n_cols = 0, n_rows = 0;
  for (std::size_t k = 0; k < w.dim(); ++k)
    if (interior(k)) ++n_cols, ++n_rows;
  u.for_each([&](std::size_t r, std::size_t c, const Scalar& v) {
    if (!in_range[r] || !in_range[c]) return;
    if (interior(c)) by_cols.push_back({r, c, v});
    if (interior(r)) by_rows.push_back({r, c, v});
  });
  auto rc = certified_rank(by_cols);
  auto rr = certified_rank(by_rows);
  WindowIndex out;
  out.m_row = w.m_row();
  out.m_col = w.m_col();
  out.kernel = n_cols - rc.rank;
  out.cokernel = n_rows - rr.rank;
  out.method = rc.method == rr.method ? rc.method : rc.method + "/" + rr.method;
  return out;
}

struct IndexReport {
  std::string label;
  std::vector<WindowIndex> windows;
  long index = 0;
  bool stable = false;

  nlohmann::json to_json() const {
    nlohmann::json ws = nlohmann::json::array();
    for (const auto& w : windows)
      ws.push_back({{"window", {w.m_row, w.m_col}},
                    {"kernel_dim", w.kernel},
                    {"cokernel_dim", w.cokernel},
                    {"index", w.index()},
                    {"rank_method", w.method}});
    return {{"label", label},
            {"window_pair", {windows.at(0).m_row, windows.at(1).m_row}},
            {"kernel_dim", windows.back().kernel},
            {"cokernel_dim", windows.back().cokernel},
            {"index", index},
            {"windows", ws},
            {"certificate", stable ? "stable across windows" : "inconclusive"}};
  }
};

using ProblemBuilder = std::function<CompressionProblem(int m)>;

/// Index at windows m and 2m; disagreement throws (inconclusive).
inline IndexReport stabilized_index(const ProblemBuilder& build, int m) {
  IndexReport report;
  for (int size : {m, 2 * m}) {
    auto problem = build(size);
    report.label = problem.label;
    report.windows.push_back(window_index(problem));
  }
  report.stable = report.windows[0].index() == report.windows[1].index();
  if (!report.stable)
    throw std::runtime_error("inconclusive: index of '" + report.label + "' changes from " +
                             std::to_string(report.windows[0].index()) + " to " +
                             std::to_string(report.windows[1].index()) + " between windows");
  report.index = report.windows[1].index();
  return report;
}

// ---------------------------------------------------------------------------
// The unitary u and its projections

/// u = p pi(beta) + (I - p), p = |e_0><e_0| (x) I.  On the i = 0 block
/// pi(beta) is the bilateral shift e_{0,j} -> e_{0,j-1}.
inline GridOperator build_u(const TruncationWindow& w) {
  return build_from_rule(w, 1, [](int i, int) {
    if (i == 0) return std::vector<Move>{{0, -1, Scalar(1)}};
    return std::vector<Move>{{0, 0, Scalar(1)}};
  });
}

/// The same operator assembled from the representation: p pi(beta) + I - p.
inline GridOperator build_u_from_representation(const TruncationWindow& w, const Rational& q = Rational(1, 2)) {
  auto p = GridOperator::diagonal(w, [&](std::size_t k) { return Scalar(w.site(k).i == 0 ? 1 : 0); });
  auto beta = represent(AlgebraElement::beta(q), w);
  return p * beta + GridOperator::identity(w) - p;
}

/// Index of P u P with P = (I + sign D)/2, optionally on several copies.
inline ProblemBuilder u_against_dirac(const DiracSpec& spec, int copies = 1) {
  return [spec, copies](int m) {
    TruncationWindow w(m, m, copies);
    return CompressionProblem{"u vs sign(" + spec.name + ")", build_u(w), sign_projection(spec, w), 1};
  };
}

inline ProblemBuilder u_against_class(const SignProjectionClass& cls, std::string label = "") {
  if (label.empty()) label = "u vs " + to_string(cls.kind);
  return [cls, label](int m) {
    TruncationWindow w(m, m);
    return CompressionProblem{label, build_u(w), projection_from_class(cls, w), 1};
  };
}

/// The 2x2 unitary [[alpha, -q beta*], [beta, alpha*]] on H (+) H (copies 2).
inline GridOperator canonical_unitary(const TruncationWindow& w2, const Rational& q,
                                      BetaConvention convention = BetaConvention::lowering) {
  if (w2.copies() != 2) throw std::invalid_argument("canonical unitary acts on two copies");
  TruncationWindow w(w2.m_row(), w2.m_col());
  Su2Representation rep(q, convention);
  const GridOperator blocks[2][2] = {
      {rep.represent(AlgebraElement::alpha(q), w), rep.represent(Rational(-q) * AlgebraElement::beta_star(q), w)},
      {rep.represent(AlgebraElement::beta(q), w), rep.represent(AlgebraElement::alpha_star(q), w)}};
  GridOperator out(w2, 1, 0);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      blocks[a][b].for_each([&](std::size_t r, std::size_t c, const Scalar& v) {
        out.add_entry(r + static_cast<std::size_t>(a) * w.dim(), c + static_cast<std::size_t>(b) * w.dim(), v);
      });
  return out;
}

enum class CanonicalProjection { dirac, identity, zero };

inline ProblemBuilder canonical_problem(const DiracSpec& spec, const Rational& q,
                                        CanonicalProjection which = CanonicalProjection::dirac) {
  return [spec, q, which](int m) {
    TruncationWindow w2(m, m, 2);
    GridOperator p(w2);
    std::string label = "canonical unitary vs ";
    switch (which) {
      case CanonicalProjection::dirac:
        p = sign_projection(spec, w2);
        label += "sign(" + spec.name + ") (x) I2";
        break;
      case CanonicalProjection::identity:
        p = GridOperator::identity(w2);
        label += "I";
        break;
      case CanonicalProjection::zero:
        label += "0";
        break;
    }
    return CompressionProblem{label, canonical_unitary(w2, q), p, 1};
  };
}

inline IndexReport canonical_unitary_pairing(int m, const Rational& q = Rational(1, 2),
                                             const DiracSpec& spec = DiracSpec::generic()) {
  return stabilized_index(canonical_problem(spec, q), m);
}

/// |m| copies of u against P = (I + sign(m) S)/2.
inline IndexReport multiplicity_pairing(int multiplicity, int window) {
  if (multiplicity == 0) throw std::invalid_argument("multiplicity must be nonzero");
  if (std::abs(multiplicity) > 16) throw std::invalid_argument("|multiplicity| exceeds the cap of 16");
  auto s = DiracSpec::constant(0);
  s.rule = [multiplicity](int, int j) { return Rational(multiplicity > 0 ? (j >= 0 ? 1 : -1) : (j >= 0 ? -1 : 1)); };
  s.name = multiplicity > 0 ? "S" : "-S";
  auto base = u_against_dirac(s, std::abs(multiplicity));
  auto report = stabilized_index(
      [&](int m) {
        auto p = base(m);
        p.label = "multiplicity " + std::to_string(multiplicity);
        return p;
      },
      window);
  return report;
}

/// Block-diagonal sum of two problems on windows of equal size.
inline CompressionProblem direct_sum(const CompressionProblem& a, const CompressionProblem& b) {
  const auto& wa = a.window();
  const auto& wb = b.window();
  if (wa.m_row() != wb.m_row() || wa.m_col() != wb.m_col())
    throw std::invalid_argument("direct sum needs windows of equal size");
  TruncationWindow w(wa.m_row(), wa.m_col(), wa.copies() + wb.copies());
  auto place = [&](const GridOperator& x, const GridOperator& y) {
    GridOperator out(w, std::max(x.reach(), y.reach()), std::max(x.margin(), y.margin()));
    x.for_each([&](std::size_t r, std::size_t c, const Scalar& v) { out.add_entry(r, c, v); });
    y.for_each([&](std::size_t r, std::size_t c, const Scalar& v) { out.add_entry(r + wa.dim(), c + wa.dim(), v); });
    return out;
  };
  return {a.label + " (+) " + b.label, place(a.unitary, b.unitary), place(a.projection, b.projection),
          std::max(a.guard, b.guard)};
}

}  // namespace nct
