#include "su11/quadrature.hpp"

#include <algorithm>
#include <boost/math/special_functions/legendre.hpp>
#include <map>
#include <mutex>
#include <stdexcept>

namespace su11::quad {

namespace {

// Reference rule on [−1, 1], cached per order.
const Rule1D& reference_gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, Rule1D> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  const auto zeros = boost::math::legendre_p_zeros<double>(n);  // nonnegative half
  Rule1D r;
  for (const double x : zeros) {
    const double dp = boost::math::legendre_p_prime<double>(n, x);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    if (x == 0.0) {
      r.nodes.push_back(0.0);
      r.weights.push_back(w);
    } else {
      r.nodes.push_back(x);
      r.weights.push_back(w);
      r.nodes.push_back(-x);
      r.weights.push_back(w);
    }
  }
  // Ascending order.
  std::vector<std::size_t> idx(r.nodes.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return r.nodes[a] < r.nodes[b]; });
  Rule1D sorted;
  for (auto i : idx) {
    sorted.nodes.push_back(r.nodes[i]);
    sorted.weights.push_back(r.weights[i]);
  }
  return cache.emplace(n, std::move(sorted)).first->second;
}

template <typename T>
T pairwise(std::span<const T> v) {
  if (v.empty()) return T{};
  if (v.size() <= 8) {
    T s{};
    for (const auto& x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise(v.first(half)) + pairwise(v.subspan(half));
}

}  // namespace

Rule1D gauss_legendre(int n, double lo, double hi) {
  if (n < 1) throw std::invalid_argument("Gauss-Legendre order must be positive");
  const Rule1D& ref = reference_gauss_legendre(n);
  const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  Rule1D r;
  r.nodes.reserve(ref.size());
  r.weights.reserve(ref.size());
  for (std::size_t i = 0; i < ref.size(); ++i) {
    r.nodes.push_back(mid + half * ref.nodes[i]);
    r.weights.push_back(half * ref.weights[i]);
  }
  return r;
}

Rule1D trapezoid(int n, double lo, double hi) {
  if (n < 2) throw std::invalid_argument("trapezoid rule needs at least 2 nodes");
  Rule1D r;
  const double h = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) {
    r.nodes.push_back(lo + h * i);
    r.weights.push_back((i == 0 || i == n - 1) ? 0.5 * h : h);
  }
  return r;
}

Rule1D periodic(int n, double period) {
  if (n < 1) throw std::invalid_argument("periodic rule order must be positive");
  Rule1D r;
  const double h = period / n;
  for (int i = 0; i < n; ++i) {
    r.nodes.push_back(h * i);
    r.weights.push_back(h);
  }
  return r;
}

std::complex<double> pairwise_sum(std::span<const std::complex<double>> values) {
  return pairwise(values);
}

double pairwise_sum(std::span<const double> values) { return pairwise(values); }

}  // namespace su11::quad
