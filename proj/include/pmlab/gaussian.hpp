#pragma once

#include <vector>

#include "pmlab/linalg.hpp"
#include "pmlab/rng.hpp"

namespace pmlab {

inline constexpr double kLogTwoPi = 1.8378770664093454835606594728112;

struct GaussianSpec {
  std::vector<double> mean;
  CovarianceMatrix cov;
};

// log of the multivariate normal density phi(x; m, S)
double mvn_logpdf(const std::vector<double>& x, const GaussianSpec& spec);

// draw m + L xi with xi standard normal
std::vector<double> mvn_sample(const GaussianSpec& spec, RngStream& rng);

// scalar normal log density
inline double normal_logpdf(double x, double mean, double var) {
  double r = x - mean;
  return -0.5 * (kLogTwoPi + std::log(var) + r * r / var);
}

}  // namespace pmlab
