#include "nct/fredholm.hpp"

#include "catch_amalgamated.hpp"

#include <Eigen/Dense>

using namespace nct;

namespace {

// Dense float oracle: restrict u to range(P), drop guard-band columns (rows)
// and count the rank deficit with a singular value decomposition.
long dense_index(const CompressionProblem& p) {
  const auto& w = p.window();
  std::vector<std::size_t> range;
  p.projection.for_each([&](std::size_t r, std::size_t, const Scalar&) { range.push_back(r); });
  std::sort(range.begin(), range.end());
  const auto n = static_cast<Eigen::Index>(range.size());
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      k(r, c) = p.unitary.entry(range[static_cast<std::size_t>(r)], range[static_cast<std::size_t>(c)]).to_double();
  std::vector<Eigen::Index> inner;
  for (Eigen::Index t = 0; t < n; ++t)
    if (w.distance_to_edge(range[static_cast<std::size_t>(t)]) >= p.guard) inner.push_back(t);
  const auto m = static_cast<Eigen::Index>(inner.size());
  Eigen::MatrixXd cols(n, m), rows(m, n);
  for (Eigen::Index t = 0; t < m; ++t) {
    cols.col(t) = k.col(inner[static_cast<std::size_t>(t)]);
    rows.row(t) = k.row(inner[static_cast<std::size_t>(t)]);
  }
  auto rank = [](const Eigen::MatrixXd& a) {
    if (a.size() == 0) return Eigen::Index(0);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
    Eigen::Index r = 0;
    for (Eigen::Index t = 0; t < svd.singularValues().size(); ++t)
      if (svd.singularValues()(t) > 1e-9) ++r;
    return r;
  };
  return static_cast<long>(m - rank(cols)) - static_cast<long>(m - rank(rows));
}

}  // namespace

TEST_CASE("the unitary u") {
  TruncationWindow w(6, 6);
  auto u = build_u(w);
  auto e = u.entry(w.flat(0, -2), w.flat(0, -1));
  CHECK((e.is_rational() && e.rational_value() == 1));
  auto f = u.entry(w.flat(3, 2), w.flat(3, 2));
  CHECK((f.is_rational() && f.rational_value() == 1));
  CHECK(interior_equal(u.adjoint() * u, GridOperator::identity(w).with_margin(1)));
  CHECK(interior_equal(build_u_from_representation(w), u));
}

TEST_CASE("index table") {
  auto generic = stabilized_index(u_against_dirac(DiracSpec::generic()), 12);
  CHECK(generic.index == 1);
  CHECK(generic.stable);
  CHECK(generic.windows[0].m_row == 12);
  CHECK(generic.windows[1].m_row == 24);
  CHECK(stabilized_index(u_against_class(make_projection_class(ProjectionKind::P1, 2, {0, 1})), 12).index == -1);
  CHECK(stabilized_index(u_against_class(make_projection_class(ProjectionKind::P2, 3, {-2, 0})), 12).index == 1);
  CHECK(stabilized_index(u_against_class(make_projection_class(ProjectionKind::P3, 2, {0, 1})), 12).index == 0);
  CHECK(stabilized_index(u_against_class(make_projection_class(ProjectionKind::P4, 2, {0, 1})), 12).index == 0);
}

TEST_CASE("exact index agrees with the dense SVD oracle") {
  std::vector<ProblemBuilder> builders{
      u_against_dirac(DiracSpec::generic()),
      u_against_class(make_projection_class(ProjectionKind::P1, 2, {0, 1})),
      u_against_class(make_projection_class(ProjectionKind::P2, 1, {0})),
      u_against_class(make_projection_class(ProjectionKind::P3, 3, {-1, 2})),
      u_against_class(make_projection_class(ProjectionKind::P4, 2, {1})),
      canonical_problem(DiracSpec::generic(), Rational(1, 2)),
      canonical_problem(DiracSpec::generic(), Rational(1, 2), CanonicalProjection::identity),
  };
  for (const auto& b : builders)
    for (int m : {6, 8}) {
      auto p = b(m);
      INFO(p.label << " at " << m);
      CHECK(window_index(p).index() == dense_index(p));
    }
}

TEST_CASE("trivial pairings") {
  CHECK(stabilized_index(canonical_problem(DiracSpec::generic(), Rational(1, 2), CanonicalProjection::identity), 8)
            .index == 0);
  CHECK(stabilized_index(canonical_problem(DiracSpec::generic(), Rational(1, 2), CanonicalProjection::zero), 8)
            .index == 0);
  auto identity_unitary = [](int m) {
    TruncationWindow w(m, m);
    return CompressionProblem{"I vs sign(D)", GridOperator::identity(w), sign_projection(DiracSpec::generic(), w), 1};
  };
  CHECK(stabilized_index(identity_unitary, 8).index == 0);
}

TEST_CASE("canonical unitary pairing is a stable nonzero integer") {
  auto r = canonical_unitary_pairing(8, Rational(1, 2));
  CHECK(r.stable);
  CHECK(r.index != 0);
  CHECK(r.index == canonical_unitary_pairing(8, Rational(1, 3)).index);
}

TEST_CASE("multiplicity pairing") {
  for (int m : {-3, -2, -1, 1, 2, 3}) CHECK(multiplicity_pairing(m, 8).index == m);
  CHECK_THROWS(multiplicity_pairing(0, 8));
}

TEST_CASE("index is additive under direct sums") {
  auto a = u_against_dirac(DiracSpec::generic())(8);
  auto b = u_against_class(make_projection_class(ProjectionKind::P1, 2, {0}))(8);
  CHECK(window_index(direct_sum(a, b)).index() == window_index(a).index() + window_index(b).index());
}

TEST_CASE("non-projections are rejected") {
  TruncationWindow w(4, 4);
  auto two = GridOperator::identity(w).scaled(Scalar(2));
  CHECK_THROWS(window_index(CompressionProblem{"bad", build_u(w), two, 1}));
}
