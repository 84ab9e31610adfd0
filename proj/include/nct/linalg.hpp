#pragma once

// Dense kernels applied block by block to sparse matrices.  A sparse matrix
// splits into independent blocks (connected components of its row/column
// incidence graph); singular values and ranks are computed per block.

#include "nct/scalar.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <unordered_map>
#include <vector>

namespace nct::linalg {

template <class T>
struct Entry {
  std::size_t row;
  std::size_t col;
  T value;
};

template <class T>
struct Block {
  std::vector<std::size_t> rows;  // global row indices, sorted
  std::vector<std::size_t> cols;  // global column indices, sorted
  std::vector<Entry<T>> entries;  // local (row, col) positions
};

namespace detail {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace detail

/// Splits entries into connected blocks.  Rows and columns are separate node
/// sets, so a single entry links exactly one row to one column.
template <class T>
std::vector<Block<T>> connected_blocks(const std::vector<Entry<T>>& entries) {
  std::unordered_map<std::size_t, std::size_t> row_node, col_node;
  std::size_t nodes = 0;
  for (const auto& e : entries) {
    if (row_node.try_emplace(e.row, nodes).second) ++nodes;
    if (col_node.try_emplace(e.col, nodes).second) ++nodes;
  }
  detail::DisjointSets sets(nodes);
  for (const auto& e : entries) sets.unite(row_node[e.row], col_node[e.col]);

  std::unordered_map<std::size_t, std::size_t> block_of_root;
  std::vector<Block<T>> blocks;
  auto block_for = [&](std::size_t node) -> Block<T>& {
    auto [it, fresh] = block_of_root.try_emplace(sets.find(node), blocks.size());
    if (fresh) blocks.emplace_back();
    return blocks[it->second];
  };
  for (const auto& [row, node] : row_node) block_for(node).rows.push_back(row);
  for (const auto& [col, node] : col_node) block_for(node).cols.push_back(col);
  for (auto& b : blocks) {
    std::sort(b.rows.begin(), b.rows.end());
    std::sort(b.cols.begin(), b.cols.end());
  }
  for (const auto& e : entries) {
    auto& b = block_for(row_node[e.row]);
    auto r = std::lower_bound(b.rows.begin(), b.rows.end(), e.row) - b.rows.begin();
    auto c = std::lower_bound(b.cols.begin(), b.cols.end(), e.col) - b.cols.begin();
    b.entries.push_back({static_cast<std::size_t>(r), static_cast<std::size_t>(c), e.value});
  }
  return blocks;
}

inline Eigen::MatrixXd dense(const Block<double>& b) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(b.rows.size()),
                                            static_cast<Eigen::Index>(b.cols.size()));
  for (const auto& e : b.entries)
    m(static_cast<Eigen::Index>(e.row), static_cast<Eigen::Index>(e.col)) += e.value;
  return m;
}

inline Eigen::VectorXd singular_values(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return Eigen::VectorXd();
  if (std::min(m.rows(), m.cols()) <= 64) {
    return Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues();
  }
  return Eigen::BDCSVD<Eigen::MatrixXd>(m).singularValues();
}

/// Largest singular value by power iteration on B^T B.  Used for blocks too
/// large for a dense SVD.
inline double power_iteration_norm(const Block<double>& b, double rel_tol = 1e-12, int max_iter = 20000) {
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(b.entries.size());
  for (const auto& e : b.entries)
    trips.emplace_back(static_cast<int>(e.row), static_cast<int>(e.col), e.value);
  Eigen::SparseMatrix<double> m(static_cast<Eigen::Index>(b.rows.size()), static_cast<Eigen::Index>(b.cols.size()));
  m.setFromTriplets(trips.begin(), trips.end());
  Eigen::VectorXd x = Eigen::VectorXd::Ones(m.cols());
  // Deterministic, non-symmetric start vector.
  for (Eigen::Index k = 0; k < x.size(); ++k) x(k) += 1e-3 * static_cast<double>(k % 7);
  x.normalize();
  double lambda = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    Eigen::VectorXd y = m.transpose() * (m * x);
    double next = y.norm();
    if (next == 0.0) return 0.0;
    x = y / next;
    if (std::abs(next - lambda) <= rel_tol * next) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  return std::sqrt(lambda);
}

/// Blocks with more than this many rows and columns use power iteration.
inline constexpr std::size_t kDenseLimit = 400;

/// Largest singular value of a sparse real matrix.
inline double spectral_norm(const std::vector<Entry<double>>& entries) {
  double best = 0.0;
  for (const auto& b : connected_blocks(entries)) {
    if (std::min(b.rows.size(), b.cols.size()) > kDenseLimit) {
      best = std::max(best, power_iteration_norm(b));
      continue;
    }
    auto sv = singular_values(dense(b));
    if (sv.size() > 0) best = std::max(best, sv(0));
  }
  return best;
}

/// Rank from singular values above tol * max(1, sigma_max).
inline std::size_t numeric_rank(const std::vector<Entry<double>>& entries, double tol = 1e-8) {
  std::size_t rank = 0;
  for (const auto& b : connected_blocks(entries)) {
    auto sv = singular_values(dense(b));
    if (sv.size() == 0) continue;
    double cutoff = tol * std::max(1.0, sv(0));
    for (Eigen::Index k = 0; k < sv.size(); ++k)
      if (sv(k) > cutoff) ++rank;
  }
  return rank;
}

/// Exact rank over the rationals by Gaussian elimination on each block.
inline std::size_t exact_rank(const std::vector<Entry<Rational>>& entries) {
  std::size_t rank = 0;
  for (const auto& b : connected_blocks(entries)) {
    std::vector<std::vector<Rational>> m(b.rows.size(), std::vector<Rational>(b.cols.size()));
    for (const auto& e : b.entries) m[e.row][e.col] += e.value;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < b.cols.size() && pivot_row < m.size(); ++c) {
      std::size_t p = pivot_row;
      while (p < m.size() && m[p][c] == 0) ++p;
      if (p == m.size()) continue;
      std::swap(m[p], m[pivot_row]);
      for (std::size_t r = pivot_row + 1; r < m.size(); ++r) {
        if (m[r][c] == 0) continue;
        Rational f = m[r][c] / m[pivot_row][c];
        for (std::size_t k = c; k < b.cols.size(); ++k) m[r][k] -= f * m[pivot_row][k];
      }
      ++pivot_row;
    }
    rank += pivot_row;
  }
  return rank;
}

/// Structural (generic) rank: maximum matching between rows and columns
/// through nonzero entries.  An upper bound for the numeric rank.
template <class T>
std::size_t structural_rank(const std::vector<Entry<T>>& entries) {
  std::size_t total = 0;
  for (const auto& b : connected_blocks(entries)) {
    std::vector<std::vector<std::size_t>> adj(b.cols.size());
    for (const auto& e : b.entries) adj[e.col].push_back(e.row);
    std::vector<long> match_row(b.rows.size(), -1);
    std::vector<char> seen;
    std::function<bool(std::size_t)> augment = [&](std::size_t c) {
      for (std::size_t r : adj[c]) {
        if (seen[r]) continue;
        seen[r] = 1;
        if (match_row[r] < 0 || augment(static_cast<std::size_t>(match_row[r]))) {
          match_row[r] = static_cast<long>(c);
          return true;
        }
      }
      return false;
    };
    for (std::size_t c = 0; c < b.cols.size(); ++c) {
      seen.assign(b.rows.size(), 0);
      if (augment(c)) ++total;
    }
  }
  return total;
}

}  // namespace nct::linalg
