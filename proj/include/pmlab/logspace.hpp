#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

#include "pmlab/errors.hpp"

namespace pmlab {

// log sum exp(v_i) via max shift; -inf entries are ignored, all -inf gives
// -inf. All likelihood arithmetic in this project stays in log space.
inline double logsumexp(std::span<const double> v) {
  if (v.empty()) throw ConfigError("logsumexp: empty input");
  double m = -std::numeric_limits<double>::infinity();
  for (double x : v) m = std::max(m, x);
  if (!std::isfinite(m)) return m;  // all -inf (or a stray +inf)
  double acc = 0.0;
  for (double x : v) acc += std::exp(x - m);
  return m + std::log(acc);
}

inline double log_mean_exp(std::span<const double> v) {
  return logsumexp(v) - std::log(static_cast<double>(v.size()));
}

}  // namespace pmlab
