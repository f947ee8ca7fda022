#pragma once

#include <complex>
#include <span>
#include <vector>

namespace su11::quad {

struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

/// n-point Gauss–Legendre rule mapped to [lo, hi].
Rule1D gauss_legendre(int n, double lo, double hi);
/// Closed trapezoid rule with n nodes on [lo, hi] (endpoints included).
Rule1D trapezoid(int n, double lo, double hi);
/// Periodic trapezoid rule: n equispaced nodes on [0, period), equal weights.
Rule1D periodic(int n, double period);

/// Pairwise (tree) sum with a fixed traversal order.
std::complex<double> pairwise_sum(std::span<const std::complex<double>> values);
double pairwise_sum(std::span<const double> values);

}  // namespace su11::quad
