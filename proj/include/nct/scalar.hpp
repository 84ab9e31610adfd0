#pragma once

// Exact scalars for truncated operators: rationals extended by formal
// square roots.  A Scalar is a finite sum  c_1 * r_1 + ... + c_n * r_n  where
// each c is rational and each r is a product of distinct square-root symbols
// drawn from a RadicalTable.  Squaring a symbol yields its radicand, which is
// itself a Scalar over earlier symbols.  Equality is formal: formally equal
// scalars are equal as reals; the converse is not claimed.

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace nct {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational rational_pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    return rational_pow(Rational(1) / base, -exponent);
  }
  Rational result = 1;
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

inline std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

/// Parses "p" or "p/q" into a Rational.
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num) / Rational(den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

/// Set of square-root symbols, one bit per radical id (ids 0..127).
struct RadicalMask {
  static constexpr int kMaxIds = 128;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  static RadicalMask single(int id) {
    if (id < 0 || id >= kMaxIds) throw std::out_of_range("radical id out of range");
    RadicalMask m;
    if (id < 64) m.lo = std::uint64_t{1} << id;
    else m.hi = std::uint64_t{1} << (id - 64);
    return m;
  }
  bool empty() const { return lo == 0 && hi == 0; }
  bool test(int id) const {
    return id < 64 ? ((lo >> id) & 1U) : ((hi >> (id - 64)) & 1U);
  }
  RadicalMask operator^(const RadicalMask& o) const { return {lo ^ o.lo, hi ^ o.hi}; }
  RadicalMask operator&(const RadicalMask& o) const { return {lo & o.lo, hi & o.hi}; }
  RadicalMask operator|(const RadicalMask& o) const { return {lo | o.lo, hi | o.hi}; }
  bool operator==(const RadicalMask& o) const = default;
  bool operator<(const RadicalMask& o) const {
    return hi != o.hi ? hi < o.hi : lo < o.lo;
  }
  std::vector<int> ids() const {
    std::vector<int> out;
    for (std::uint64_t w = lo; w; w &= w - 1) out.push_back(std::countr_zero(w));
    for (std::uint64_t w = hi; w; w &= w - 1) out.push_back(64 + std::countr_zero(w));
    return out;
  }
};

class Scalar;

/// Supplies radicands (and their numeric square roots) for radical ids.
class RadicalTable {
 public:
  virtual ~RadicalTable() = default;
  virtual Scalar radicand(int id) const = 0;
  virtual std::string symbol(int id) const { return "s" + std::to_string(id); }
  /// Tables with equal nonempty keys describe the same radicals.
  virtual std::string key() const { return {}; }
  double root_value(int id) const;

 private:
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<int, double> root_cache_;
};

using RadicalTablePtr = std::shared_ptr<const RadicalTable>;

class Scalar {
 public:
  struct Term {
    RadicalMask mask;
    Rational coeff;
  };

  Scalar() = default;
  Scalar(const Rational& r) {  // NOLINT(google-explicit-constructor)
    if (r != 0) terms_.push_back({RadicalMask{}, r});
  }
  Scalar(long v) : Scalar(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : Scalar(Rational(v)) {}   // NOLINT(google-explicit-constructor)

  /// The formal square root of radicand(id).
  static Scalar radical(int id, RadicalTablePtr table, const Rational& coeff = 1) {
    Scalar s;
    if (coeff != 0) s.terms_.push_back({RadicalMask::single(id), coeff});
    s.table_ = std::move(table);
    return s;
  }

  /// coeff times the product of the radicals in mask.
  static Scalar term(RadicalMask mask, const Rational& coeff, RadicalTablePtr table) {
    Scalar s;
    if (coeff != 0) s.terms_.push_back({mask, coeff});
    if (!mask.empty()) s.table_ = std::move(table);
    return s;
  }

  const std::vector<Term>& terms() const { return terms_; }
  const RadicalTablePtr& table() const { return table_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mask.empty());
  }
  Rational rational_value() const {
    if (!is_rational()) throw std::domain_error("scalar has radical terms: " + str());
    return terms_.empty() ? Rational(0) : terms_[0].coeff;
  }

  double to_double() const {
    double sum = 0.0;
    for (const auto& t : terms_) {
      double v = nct::to_double(t.coeff);
      for (int id : t.mask.ids()) v *= table_->root_value(id);
      sum += v;
    }
    return sum;
  }

  Scalar operator-() const {
    Scalar r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar r;
    r.table_ = merge_tables(a.table_, b.table_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->mask < ib->mask)) {
        r.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || ib->mask < ia->mask) {
        r.terms_.push_back(*ib++);
      } else {
        Rational c = ia->coeff + ib->coeff;
        if (c != 0) r.terms_.push_back({ia->mask, std::move(c)});
        ++ia;
        ++ib;
      }
    }
    return r;
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return {};
    RadicalTablePtr table = merge_tables(a.table_, b.table_);
    if (a.is_rational()) return b.scaled(a.terms_[0].coeff, table);
    if (b.is_rational()) return a.scaled(b.terms_[0].coeff, table);
    Scalar acc;
    acc.table_ = table;
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        Scalar prod;
        prod.table_ = table;
        prod.terms_.push_back({ta.mask ^ tb.mask, ta.coeff * tb.coeff});
        for (int id : (ta.mask & tb.mask).ids()) prod = prod * table->radicand(id);
        acc = acc + prod;
      }
    }
    return acc;
  }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t n = 0; n < a.terms_.size(); ++n) {
      if (!(a.terms_[n].mask == b.terms_[n].mask) || a.terms_[n].coeff != b.terms_[n].coeff)
        return false;
    }
    return true;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
      if (!first) os << " + ";
      first = false;
      os << t.coeff;
      for (int id : t.mask.ids()) os << '*' << (table_ ? table_->symbol(id) : "s" + std::to_string(id));
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  static RadicalTablePtr merge_tables(const RadicalTablePtr& a, const RadicalTablePtr& b) {
    if (!a) return b;
    if (!b || a == b) return a;
    if (!a->key().empty() && a->key() == b->key()) return a;
    throw std::invalid_argument("scalars from different radical tables");
  }

  Scalar scaled(const Rational& c, const RadicalTablePtr& table) const {
    Scalar r;
    r.table_ = table;
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  std::vector<Term> terms_;  // sorted by mask, no zero coefficients
  RadicalTablePtr table_;
};

inline double RadicalTable::root_value(int id) const {
  {
    std::lock_guard lock(cache_mutex_);
    auto it = root_cache_.find(id);
    if (it != root_cache_.end()) return it->second;
  }
  double v = radicand(id).to_double();
  if (v < 0) throw std::domain_error("negative radicand for " + symbol(id));
  double root = std::sqrt(v);
  std::lock_guard lock(cache_mutex_);
  root_cache_.emplace(id, root);
  return root;
}

}  // namespace nct
