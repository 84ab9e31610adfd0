#pragma once

// Finite models of l2(N) (x) l2(Z) (and of sums of copies of l2(N)) together
// with sparse operators whose entries are exact Scalars.
//
// A truncated operator built directly is the compression P_W T P_W of an
// infinite operator T to a window W, exact everywhere (margin 0).  Products
// of compressions differ from compressions of products near the truncation
// edge, so every operator carries an interior margin: entries whose row and
// column both lie at distance >= margin from the edge are exact.  `reach`
// bounds how far (in lattice steps) one application moves a basis vector;
// margin(AB) = max(margin A, margin B) + reach(B).

#include "nct/linalg.hpp"
#include "nct/scalar.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nct {

/// Basis e_{ij}, 0 <= i <= m_row, |j| <= m_col, repeated `copies` times
/// (copies > 1 models H (x) C^k).
class TruncationWindow {
 public:
  struct Site {
    int i;
    int j;
    int copy;
  };

  TruncationWindow(int m_row, int m_col, int copies = 1)
      : m_row_(m_row), m_col_(m_col), copies_(copies) {
    if (m_row < 1 || m_col < 1) throw std::invalid_argument("window needs m_row >= 1 and m_col >= 1");
    if (copies < 1) throw std::invalid_argument("window needs at least one copy");
  }

  int m_row() const { return m_row_; }
  int m_col() const { return m_col_; }
  int copies() const { return copies_; }
  std::size_t block_dim() const {
    return static_cast<std::size_t>(m_row_ + 1) * static_cast<std::size_t>(2 * m_col_ + 1);
  }
  std::size_t dim() const { return block_dim() * static_cast<std::size_t>(copies_); }

  bool contains(int i, int j) const { return i >= 0 && i <= m_row_ && std::abs(j) <= m_col_; }

  std::size_t flat(int i, int j, int copy = 0) const {
    if (!contains(i, j) || copy < 0 || copy >= copies_)
      throw std::out_of_range("site (" + std::to_string(i) + "," + std::to_string(j) + ") outside window");
    return static_cast<std::size_t>(copy) * block_dim() +
           static_cast<std::size_t>(i) * static_cast<std::size_t>(2 * m_col_ + 1) +
           static_cast<std::size_t>(j + m_col_);
  }

  Site site(std::size_t index) const {
    if (index >= dim()) throw std::out_of_range("flat index outside window");
    auto copy = static_cast<int>(index / block_dim());
    auto rem = index % block_dim();
    auto width = static_cast<std::size_t>(2 * m_col_ + 1);
    return {static_cast<int>(rem / width), static_cast<int>(rem % width) - m_col_, copy};
  }

  /// Lattice distance to the truncation edge (i = m_row or |j| = m_col).
  /// The edge i = 0 of l2(N) is genuine and does not count.
  int distance_to_edge(std::size_t index) const {
    auto s = site(index);
    return std::min(m_row_ - s.i, m_col_ - std::abs(s.j));
  }

  /// True for basis vectors with i > cut or |j| > cut.
  bool beyond_cut(std::size_t index, int cut) const {
    auto s = site(index);
    return s.i > cut || std::abs(s.j) > cut;
  }

  std::string describe(std::size_t index) const {
    auto s = site(index);
    std::string out = "(" + std::to_string(s.i) + "," + std::to_string(s.j) + ")";
    if (copies_ > 1) out += "#" + std::to_string(s.copy);
    return out;
  }

  bool operator==(const TruncationWindow&) const = default;

 private:
  int m_row_;
  int m_col_;
  int copies_;
};

/// Basis e_n, 0 <= n <= m, repeated `copies` times (H_+ (+) H_- for copies = 2).
class ChainWindow {
 public:
  struct Site {
    int n;
    int copy;
  };

  explicit ChainWindow(int m, int copies = 1) : m_(m), copies_(copies) {
    if (m < 1) throw std::invalid_argument("chain window needs m >= 1");
    if (copies < 1) throw std::invalid_argument("chain window needs at least one copy");
  }

  int m() const { return m_; }
  int copies() const { return copies_; }
  std::size_t block_dim() const { return static_cast<std::size_t>(m_ + 1); }
  std::size_t dim() const { return block_dim() * static_cast<std::size_t>(copies_); }
  bool contains(int n) const { return n >= 0 && n <= m_; }

  std::size_t flat(int n, int copy = 0) const {
    if (!contains(n) || copy < 0 || copy >= copies_) throw std::out_of_range("chain site outside window");
    return static_cast<std::size_t>(copy) * block_dim() + static_cast<std::size_t>(n);
  }
  Site site(std::size_t index) const {
    if (index >= dim()) throw std::out_of_range("flat index outside chain window");
    return {static_cast<int>(index % block_dim()), static_cast<int>(index / block_dim())};
  }
  int distance_to_edge(std::size_t index) const { return m_ - site(index).n; }
  bool beyond_cut(std::size_t index, int cut) const { return site(index).n > cut; }
  std::string describe(std::size_t index) const {
    auto s = site(index);
    return "(" + std::to_string(s.n) + ")#" + std::to_string(s.copy);
  }

  bool operator==(const ChainWindow&) const = default;

 private:
  int m_;
  int copies_;
};

template <class Space>
class TruncatedOperator {
 public:
  using Index = std::size_t;
  using Column = std::map<Index, Scalar>;

  explicit TruncatedOperator(Space space, int reach = 0, int margin = 0)
      : space_(std::move(space)), columns_(space_.dim()), reach_(reach), margin_(margin) {}

  static TruncatedOperator identity(const Space& space) {
    TruncatedOperator op(space);
    for (Index k = 0; k < space.dim(); ++k) op.add_entry(k, k, Scalar(1));
    return op;
  }

  /// Diagonal operator with entries f(index).
  static TruncatedOperator diagonal(const Space& space, const std::function<Scalar(Index)>& f) {
    TruncatedOperator op(space);
    for (Index k = 0; k < space.dim(); ++k) op.add_entry(k, k, f(k));
    return op;
  }

  const Space& space() const { return space_; }
  int reach() const { return reach_; }
  int margin() const { return margin_; }
  TruncatedOperator with_margin(int margin) const {
    TruncatedOperator r = *this;
    r.margin_ = margin;
    return r;
  }
  TruncatedOperator with_reach(int reach) const {
    TruncatedOperator r = *this;
    r.reach_ = reach;
    return r;
  }

  /// Accumulates v into entry (row, col).  Used while building.
  void add_entry(Index row, Index col, const Scalar& v) {
    if (row >= space_.dim() || col >= space_.dim()) throw std::out_of_range("entry outside window");
    if (v.is_zero()) return;
    auto& column = columns_[col];
    auto it = column.find(row);
    if (it == column.end()) {
      column.emplace(row, v);
    } else {
      it->second += v;
      if (it->second.is_zero()) column.erase(it);
    }
  }

  Scalar entry(Index row, Index col) const {
    const auto& column = columns_.at(col);
    auto it = column.find(row);
    return it == column.end() ? Scalar() : it->second;
  }

  const Column& column(Index col) const { return columns_.at(col); }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
  }
  bool is_zero() const { return nnz() == 0; }

  bool is_rational() const {
    for (const auto& c : columns_)
      for (const auto& [row, v] : c)
        if (!v.is_rational()) return false;
    return true;
  }

  /// f(row, col, value) for every nonzero entry, column-major.
  template <class F>
  void for_each(F&& f) const {
    for (Index c = 0; c < columns_.size(); ++c)
      for (const auto& [r, v] : columns_[c]) f(r, c, v);
  }

  bool in_interior(Index row, Index col, int margin) const {
    return space_.distance_to_edge(row) >= margin && space_.distance_to_edge(col) >= margin;
  }

  friend TruncatedOperator operator+(const TruncatedOperator& a, const TruncatedOperator& b) {
    require_same_space(a, b);
    TruncatedOperator r = a;
    r.reach_ = std::max(a.reach_, b.reach_);
    r.margin_ = std::max(a.margin_, b.margin_);
    b.for_each([&](Index row, Index col, const Scalar& v) { r.add_entry(row, col, v); });
    return r;
  }

  TruncatedOperator operator-() const { return scaled(Scalar(-1)); }

  friend TruncatedOperator operator-(const TruncatedOperator& a, const TruncatedOperator& b) {
    return a + (-b);
  }

  friend TruncatedOperator operator*(const TruncatedOperator& a, const TruncatedOperator& b) {
    require_same_space(a, b);
    TruncatedOperator r(a.space_, a.reach_ + b.reach_, std::max(a.margin_, b.margin_) + b.reach_);
    for (Index c = 0; c < b.columns_.size(); ++c) {
      auto& out = r.columns_[c];
      for (const auto& [k, bv] : b.columns_[c]) {
        for (const auto& [row, av] : a.columns_[k]) {
          Scalar p = av * bv;
          auto it = out.find(row);
          if (it == out.end()) {
            out.emplace(row, std::move(p));
          } else {
            it->second += p;
          }
        }
      }
      std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    }
    return r;
  }

  TruncatedOperator scaled(const Scalar& s) const {
    TruncatedOperator r(space_, reach_, margin_);
    if (s.is_zero()) return r;
    for_each([&](Index row, Index col, const Scalar& v) { r.add_entry(row, col, v * s); });
    return r;
  }

  /// Conjugate transpose.  Entries are real, so this is the transpose.
  TruncatedOperator adjoint() const {
    TruncatedOperator r(space_, reach_, margin_);
    for_each([&](Index row, Index col, const Scalar& v) { r.add_entry(col, row, v); });
    return r;
  }

  /// Drops every entry outside the exact interior.
  TruncatedOperator restricted_to_interior() const {
    TruncatedOperator r(space_, reach_, margin_);
    for_each([&](Index row, Index col, const Scalar& v) {
      if (in_interior(row, col, margin_)) r.add_entry(row, col, v);
    });
    return r;
  }

  /// Keeps only the entries for which keep(row, col) holds.
  template <class Pred>
  TruncatedOperator filtered(Pred keep) const {
    TruncatedOperator r(space_, reach_, margin_);
    for_each([&](Index row, Index col, const Scalar& v) {
      if (keep(row, col)) r.add_entry(row, col, v);
    });
    return r;
  }

  /// Exact equality on the common interior.
  friend bool interior_equal(const TruncatedOperator& a, const TruncatedOperator& b) {
    require_same_space(a, b);
    int m = std::max(a.margin_, b.margin_);
    auto diff = a - b;
    bool equal = true;
    diff.for_each([&](Index row, Index col, const Scalar&) {
      if (diff.in_interior(row, col, m)) equal = false;
    });
    return equal;
  }

  /// Exact entrywise equality on the whole window.
  friend bool operator==(const TruncatedOperator& a, const TruncatedOperator& b) {
    if (!(a.space_ == b.space_)) return false;
    return a.columns_.size() == b.columns_.size() && (a - b).is_zero();
  }

  std::vector<linalg::Entry<double>> double_entries() const {
    std::vector<linalg::Entry<double>> out;
    for_each([&](Index row, Index col, const Scalar& v) { out.push_back({row, col, v.to_double()}); });
    return out;
  }

  std::vector<linalg::Entry<Rational>> rational_entries() const {
    std::vector<linalg::Entry<Rational>> out;
    for_each([&](Index row, Index col, const Scalar& v) { out.push_back({row, col, v.rational_value()}); });
    return out;
  }

 private:
  static void require_same_space(const TruncatedOperator& a, const TruncatedOperator& b) {
    if (!(a.space_ == b.space_)) throw std::invalid_argument("operators live on different windows");
  }

  Space space_;
  std::vector<Column> columns_;
  int reach_;
  int margin_;
};

using GridOperator = TruncatedOperator<TruncationWindow>;
using ChainOperator = TruncatedOperator<ChainWindow>;

// ---------------------------------------------------------------------------
// Elementary operators on l2(N) (x) l2(Z)

enum class Elementary { shift_n, shift_z, number_n, number_z, q_pow_n, sign_s };

struct RankOne {
  int i, j, i2, j2;  // |e_{ij}><e_{i2 j2}|
};

inline void require_q(const Rational& q) {
  if (q <= 0 || q >= 1) throw std::invalid_argument("q must lie in (0,1)");
}

/// The named operator on every copy of the window.  q is used by q_pow_n only.
inline GridOperator build_elementary(const TruncationWindow& w, Elementary which,
                                     const Rational& q = Rational(1, 2)) {
  if (which == Elementary::q_pow_n) require_q(q);
  const int reach = (which == Elementary::shift_n || which == Elementary::shift_z) ? 1 : 0;
  GridOperator op(w, reach, 0);
  for (std::size_t col = 0; col < w.dim(); ++col) {
    auto s = w.site(col);
    switch (which) {
      case Elementary::shift_n:  // e_k -> e_{k-1}, e_0 -> 0
        if (s.i >= 1) op.add_entry(w.flat(s.i - 1, s.j, s.copy), col, Scalar(1));
        break;
      case Elementary::shift_z:  // e_k -> e_{k-1}
        if (w.contains(s.i, s.j - 1)) op.add_entry(w.flat(s.i, s.j - 1, s.copy), col, Scalar(1));
        break;
      case Elementary::number_n:
        op.add_entry(col, col, Scalar(s.i));
        break;
      case Elementary::number_z:
        op.add_entry(col, col, Scalar(s.j));
        break;
      case Elementary::q_pow_n:
        op.add_entry(col, col, Scalar(rational_pow(q, s.i)));
        break;
      case Elementary::sign_s:  // +1 on j >= 0, -1 on j < 0
        op.add_entry(col, col, Scalar(s.j >= 0 ? 1 : -1));
        break;
    }
  }
  return op;
}

inline GridOperator build_rank_one(const TruncationWindow& w, RankOne r, int copy = 0) {
  GridOperator op(w, std::abs(r.i - r.i2) + std::abs(r.j - r.j2), 0);
  op.add_entry(w.flat(r.i, r.j, copy), w.flat(r.i2, r.j2, copy), Scalar(1));
  return op;
}

/// Operator mapping e_{ij} to  sum_t  first(i) * second_t  e_{i + di, j + dj_t}:
/// a diagonal-in-i factor times a finite band in j.  Entries are produced by
/// `rule(i, j)`, which returns (di, dj, value) triples.
struct Move {
  int di;
  int dj;
  Scalar value;
};

inline GridOperator build_from_rule(const TruncationWindow& w, int reach,
                                    const std::function<std::vector<Move>(int, int)>& rule) {
  GridOperator op(w, reach, 0);
  for (std::size_t col = 0; col < w.dim(); ++col) {
    auto s = w.site(col);
    for (const auto& mv : rule(s.i, s.j)) {
      if (w.contains(s.i + mv.di, s.j + mv.dj))
        op.add_entry(w.flat(s.i + mv.di, s.j + mv.dj, s.copy), col, mv.value);
    }
  }
  return op;
}

// ---------------------------------------------------------------------------
// Norms

template <class Space>
double operator_norm(const TruncatedOperator<Space>& op) {
  return linalg::spectral_norm(op.double_entries());
}

/// For each cut M, the norm of op restricted to basis vectors beyond M
/// (i > M or |j| > M on the grid, n > M on a chain).
template <class Space>
std::vector<double> tail_norm_profile(const TruncatedOperator<Space>& op, const std::vector<int>& cuts) {
  if (cuts.empty()) throw std::invalid_argument("tail_norm_profile needs at least one cut");
  std::vector<double> out;
  out.reserve(cuts.size());
  for (int cut : cuts) {
    auto tail = op.filtered([&](std::size_t, std::size_t col) { return op.space().beyond_cut(col, cut); });
    out.push_back(operator_norm(tail));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Floating-point operators for analytic certificates
//
// Same window, reach and margin bookkeeping as TruncatedOperator, with
// double entries in an Eigen sparse matrix.  Used where only norms are
// needed and exact products would be slow.

template <class Space>
class NumericOperator {
 public:
  using Matrix = Eigen::SparseMatrix<double>;

  explicit NumericOperator(Space space, int reach = 0, int margin = 0)
      : space_(std::move(space)), m_(dim(), dim()), reach_(reach), margin_(margin) {}

  explicit NumericOperator(const TruncatedOperator<Space>& op)
      : NumericOperator(op.space(), op.reach(), op.margin()) {
    std::vector<Eigen::Triplet<double>> trips;
    op.for_each([&](std::size_t r, std::size_t c, const Scalar& v) {
      trips.emplace_back(static_cast<int>(r), static_cast<int>(c), v.to_double());
    });
    m_.setFromTriplets(trips.begin(), trips.end());
  }

  const Space& space() const { return space_; }
  const Matrix& matrix() const { return m_; }
  int reach() const { return reach_; }
  int margin() const { return margin_; }

  friend NumericOperator operator+(const NumericOperator& a, const NumericOperator& b) {
    require_same_space(a, b);
    NumericOperator r(a.space_, std::max(a.reach_, b.reach_), std::max(a.margin_, b.margin_));
    r.m_ = a.m_ + b.m_;
    return r;
  }
  friend NumericOperator operator-(const NumericOperator& a, const NumericOperator& b) { return a + b.scaled(-1.0); }
  friend NumericOperator operator*(const NumericOperator& a, const NumericOperator& b) {
    require_same_space(a, b);
    NumericOperator r(a.space_, a.reach_ + b.reach_, std::max(a.margin_, b.margin_) + b.reach_);
    r.m_ = (a.m_ * b.m_).pruned();
    return r;
  }
  NumericOperator scaled(double s) const {
    NumericOperator r = *this;
    r.m_ *= s;
    return r;
  }

  /// Entries whose row and column lie at distance >= margin from the edge.
  std::vector<linalg::Entry<double>> interior_entries() const {
    std::vector<linalg::Entry<double>> out;
    for (int c = 0; c < m_.outerSize(); ++c)
      for (Matrix::InnerIterator it(m_, c); it; ++it) {
        auto row = static_cast<std::size_t>(it.row());
        auto col = static_cast<std::size_t>(it.col());
        if (it.value() != 0.0 && space_.distance_to_edge(row) >= margin_ && space_.distance_to_edge(col) >= margin_)
          out.push_back({row, col, it.value()});
      }
    return out;
  }

 private:
  std::size_t dim() const { return space_.dim(); }
  static void require_same_space(const NumericOperator& a, const NumericOperator& b) {
    if (!(a.space_ == b.space_)) throw std::invalid_argument("operators live on different windows");
  }

  Space space_;
  Matrix m_;
  int reach_;
  int margin_;
};

using NumericGridOperator = NumericOperator<TruncationWindow>;
using NumericChainOperator = NumericOperator<ChainWindow>;

/// Tail norms of the exact interior of op: for each cut, the norm of the
/// interior columns beyond the cut.  `beyond` defaults to the window's own
/// notion (i > M or |j| > M on the grid).
template <class Space>
std::vector<double> interior_tail_profile(
    const NumericOperator<Space>& op, const std::vector<int>& cuts,
    const std::function<bool(std::size_t, int)>& beyond = nullptr) {
  if (cuts.empty()) throw std::invalid_argument("tail profile needs at least one cut");
  auto entries = op.interior_entries();
  std::vector<double> out;
  for (int cut : cuts) {
    std::vector<linalg::Entry<double>> tail;
    for (const auto& e : entries) {
      bool keep = beyond ? beyond(e.col, cut) : op.space().beyond_cut(e.col, cut);
      if (keep) tail.push_back(e);
    }
    out.push_back(linalg::spectral_norm(tail));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text serialization (grid operators on a single copy)
//
//   window m_row m_col margin
//   i j i' j' num den [s id ...]
//
// One line per entry; an entry with radical terms uses one line per term.

inline void write_operator(std::ostream& os, const GridOperator& op) {
  const auto& w = op.space();
  if (w.copies() != 1) throw std::invalid_argument("serialization supports single-copy windows");
  os << "window " << w.m_row() << ' ' << w.m_col() << ' ' << op.margin() << '\n';
  op.for_each([&](std::size_t row, std::size_t col, const Scalar& v) {
    auto r = w.site(row);
    auto c = w.site(col);
    for (const auto& t : v.terms()) {
      os << r.i << ' ' << r.j << ' ' << c.i << ' ' << c.j << ' ' << numerator(t.coeff) << ' '
         << denominator(t.coeff);
      auto ids = t.mask.ids();
      if (!ids.empty()) {
        os << " s";
        for (int id : ids) os << ' ' << id;
      }
      os << '\n';
    }
  });
}

inline std::string serialize(const GridOperator& op) {
  std::ostringstream os;
  write_operator(os, op);
  return os.str();
}

/// Reads the text format.  Radical terms need the table they refer to.
inline GridOperator read_operator(std::istream& is, const RadicalTablePtr& table = nullptr) {
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("missing window header");
  std::istringstream head(line);
  std::string tag;
  int m_row = 0, m_col = 0, margin = 0;
  if (!(head >> tag >> m_row >> m_col >> margin) || tag != "window")
    throw std::invalid_argument("bad window header: '" + line + "'");
  TruncationWindow w(m_row, m_col);
  GridOperator op(w, margin, margin);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    int i, j, i2, j2;
    std::string num, den;
    if (!(ls >> i >> j >> i2 >> j2 >> num >> den)) throw std::invalid_argument("bad entry line: '" + line + "'");
    Rational coeff = parse_rational(num + "/" + den);
    Scalar value(coeff);
    std::string marker;
    if (ls >> marker) {
      if (marker != "s" || !table) throw std::invalid_argument("radical entry without a radical table");
      int id;
      while (ls >> id) value = value * Scalar::radical(id, table);
    }
    op.add_entry(w.flat(i, j), w.flat(i2, j2), value);
  }
  return op;
}

inline GridOperator deserialize(const std::string& text, const RadicalTablePtr& table = nullptr) {
  std::istringstream is(text);
  return read_operator(is, table);
}

}  // namespace nct
