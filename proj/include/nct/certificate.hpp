#pragma once

// Numerical compactness certificates.  An operator identity "X = Y mod
// compacts" is certified on a window by the tail norms of the exact interior
// of X - Y: beyond cuts M = 8, 16, 32 the tail must shrink by at least 2x per
// doubling (or already be below 1e-12).  This is evidence, not proof.

#include "nct/truncation.hpp"

#include "json.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nct {

inline constexpr double kTailFloor = 1e-12;
inline constexpr double kTailDecay = 2.0;

inline const std::vector<int>& default_cuts() {
  static const std::vector<int> cuts{8, 16, 32};
  return cuts;
}

struct CompactnessCertificate {
  std::string identity;
  std::vector<int> window;
  int margin = 0;
  std::vector<int> cuts;
  std::vector<double> tails;
  bool pass = false;

  nlohmann::json to_json() const {
    return {{"identity", identity}, {"window", window},     {"interior_margin", margin},
            {"cuts", cuts},         {"tail_norms", tails}, {"decay_factor_required", kTailDecay},
            {"pass", pass}};
  }
};

inline bool tails_decay(const std::vector<double>& tails) {
  for (std::size_t n = 1; n < tails.size(); ++n)
    if (!(tails[n] < kTailFloor || tails[n] * kTailDecay <= tails[n - 1])) return false;
  return true;
}

inline std::vector<int> window_shape(const TruncationWindow& w) { return {w.m_row(), w.m_col()}; }
inline std::vector<int> window_shape(const ChainWindow& w) { return {w.m()}; }

inline int interior_extent(const TruncationWindow& w, int margin) {
  return std::min(w.m_row(), w.m_col()) - margin;
}
inline int interior_extent(const ChainWindow& w, int margin) { return w.m() - margin; }

template <class Space>
CompactnessCertificate compactness_certificate(std::string identity, const NumericOperator<Space>& residual,
                                               const std::vector<int>& cuts = default_cuts(),
                                               const std::function<bool(std::size_t, int)>& beyond = nullptr) {
  if (interior_extent(residual.space(), residual.margin()) <= cuts.back())
    throw std::invalid_argument("window too small: the exact interior does not reach past the last cut");
  CompactnessCertificate c;
  c.identity = std::move(identity);
  c.window = window_shape(residual.space());
  c.margin = residual.margin();
  c.cuts = cuts;
  c.tails = interior_tail_profile(residual, cuts, beyond);
  c.pass = tails_decay(c.tails);
  return c;
}

/// Window size that leaves an exact interior past the last cut.
inline int certificate_window(int reach, const std::vector<int>& cuts = default_cuts()) {
  return cuts.back() + 8 + reach;
}

}  // namespace nct
