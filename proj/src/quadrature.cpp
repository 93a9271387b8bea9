#include "rmd/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace rmd {

namespace {

struct LegendreEval {
  double value;
  double derivative;
};

// Three-term recurrence for P_n(z) and P_n'(z), |z| < 1.
LegendreEval legendre(std::size_t n, double z) {
  double p0 = 1.0;
  double p1 = z;
  for (std::size_t k = 2; k <= n; ++k) {
    const double kd = static_cast<double>(k);
    const double p2 = ((2.0 * kd - 1.0) * z * p1 - (kd - 1.0) * p0) / kd;
    p0 = p1;
    p1 = p2;
  }
  const double nd = static_cast<double>(n);
  const double dp = nd * (z * p1 - p0) / (z * z - 1.0);
  return {p1, dp};
}

}  // namespace

QuadratureRule::QuadratureRule(std::vector<double> nodes, std::vector<double> weights)
    : nodes_(std::move(nodes)), weights_(std::move(weights)) {
  if (nodes_.empty() || nodes_.size() != weights_.size())
    throw std::invalid_argument("quadrature rule: nodes and weights must be non-empty and equal length");
}

QuadratureRule gauss_legendre(std::size_t n) {
  if (n == 0) throw std::invalid_argument("gauss_legendre: order must be at least 1");

  std::vector<double> nodes(n);
  std::vector<double> weights(n);
  const std::size_t half = (n + 1) / 2;
  const double nd = static_cast<double>(n);

  for (std::size_t i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (nd + 0.5));
    LegendreEval pe{};
    for (int iter = 0; iter < 100; ++iter) {
      pe = legendre(n, z);
      const double dz = pe.value / pe.derivative;
      z -= dz;
      if (std::abs(dz) <= 1e-15) break;
    }
    pe = legendre(n, z);
    const double w = 2.0 / ((1.0 - z * z) * pe.derivative * pe.derivative);

    const bool middle = (n % 2 == 1) && (i == half - 1);
    if (middle) z = 0.0;
    nodes[i] = -z;
    nodes[n - 1 - i] = z;
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
  return QuadratureRule(std::move(nodes), std::move(weights));
}

const QuadratureRule& gauss_legendre_cached(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<const QuadratureRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<const QuadratureRule>(gauss_legendre(n));
  return *slot;
}

}  // namespace rmd
