#include "pmlab/gaussian.hpp"

#include <cmath>

#include "pmlab/errors.hpp"

namespace pmlab {

double mvn_logpdf(const std::vector<double>& x, const GaussianSpec& spec) {
  const std::size_t d = spec.cov.dim();
  if (x.size() != d || spec.mean.size() != d) {
    throw ConfigError("mvn_logpdf: dimension mismatch");
  }
  std::vector<double> r(d);
  for (std::size_t i = 0; i < d; ++i) r[i] = x[i] - spec.mean[i];
  double quad;
  if (spec.cov.is_identity()) {
    quad = 0.0;
    for (double v : r) quad += v * v;
  } else {
    const std::vector<double> y = spec.cov.solve(r);
    quad = 0.0;
    for (std::size_t i = 0; i < d; ++i) quad += r[i] * y[i];
  }
  return -0.5 * (static_cast<double>(d) * kLogTwoPi + spec.cov.log_det() + quad);
}

std::vector<double> mvn_sample(const GaussianSpec& spec, RngStream& rng) {
  const std::size_t d = spec.cov.dim();
  std::vector<double> xi(d);
  for (std::size_t i = 0; i < d; ++i) xi[i] = rng.normal();
  std::vector<double> x(spec.mean);
  const Matrix& l = spec.cov.chol();
  for (std::size_t i = 0; i < d; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j <= i; ++j) acc += l(i, j) * xi[j];
    x[i] += acc;
  }
  return x;
}

}  // namespace pmlab
