#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace rmd {

// Gauss-Legendre rule on [-1, 1]: nodes ascending and symmetric about 0,
// positive weights summing to 2. Exact for polynomials of degree <= 2n-1.
class QuadratureRule {
 public:
  QuadratureRule(std::vector<double> nodes, std::vector<double> weights);

  std::size_t order() const { return nodes_.size(); }
  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> weights() const { return weights_; }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

inline constexpr std::size_t default_gauss_points = 16;

// Throws std::invalid_argument for n == 0.
QuadratureRule gauss_legendre(std::size_t n);

// Same rule, generated once per order and shared. Thread-safe.
const QuadratureRule& gauss_legendre_cached(std::size_t n);

// Maps the rule onto [a, b] and returns the weighted sum of f at the mapped nodes.
template <class F>
double integrate(F&& f, double a, double b, const QuadratureRule& rule) {
  if (a == b) return 0.0;
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  const auto nodes = rule.nodes();
  const auto weights = rule.weights();
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) sum += half * weights[i] * f(half * nodes[i] + mid);
  return sum;
}

}  // namespace rmd
