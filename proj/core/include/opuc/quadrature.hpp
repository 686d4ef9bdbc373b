#ifndef OPUC_QUADRATURE_HPP
#define OPUC_QUADRATURE_HPP

#include <functional>
#include <stdexcept>
#include <vector>

#include "opuc/sequences.hpp"

namespace opuc {

// Uniform samples at theta_k = 2 pi k / m, m a power of two in [8, 2^20].
struct PeriodicSamples {
  std::size_t m = 0;
  std::vector<Complex> values;

  PeriodicSamples() = default;
  PeriodicSamples(std::size_t grid, std::vector<Complex> vals);
};

struct IntegralResult {
  Complex value{};
  double est_error = 0.0;  // |final - previous refinement|
  std::size_t m_used = 0;

  double real() const { return value.real(); }
};

class QuadratureError : public std::runtime_error {
public:
  QuadratureError(const std::string& what, Complex last, Complex previous)
      : std::runtime_error(what), last_estimate(last), previous_estimate(previous) {}
  Complex last_estimate{};
  Complex previous_estimate{};
};

inline constexpr std::size_t kGridStart = 64;
inline constexpr std::size_t kGridCap = std::size_t{1} << 20;

// Integral dtheta/2pi by trapezoid on a doubling grid (spectrally accurate for
// smooth periodic integrands). Throws QuadratureError at the grid cap and
// std::domain_error on a non-finite sample.
IntegralResult periodic_mean(const std::function<Complex(double)>& evaluator, double atol);

// Integral dtheta/2pi by globally adaptive Simpson bisection. Unlike the
// uniform grid, this resolves integrable near-singularities (log spikes from
// polynomial zeros close to the circle) in O(log 1/width) subdivisions.
// Throws QuadratureError when the depth cap (48 bisections) is hit with the
// local tolerance unmet, std::domain_error on a non-finite sample.
IntegralResult adaptive_mean(const std::function<Complex(double)>& evaluator, double atol);

// int prod_k (1-cos(theta-theta_k))^{m_k} log(weight(theta)) dtheta/2pi.
// Throws std::domain_error if a weight sample is not strictly positive.
IntegralResult entropy_functional(const std::function<double(double)>& weight_eval,
                                  const SingularityProfile& profile, double atol);

// b_n = (1/m) sum_k values_k e^{-i n theta_k}; requires |n| < m/2.
Complex fourier_coeff(const PeriodicSamples& samples, std::int64_t n);

// int (e^{i theta}+z)/(e^{i theta}-z) Q(theta) dtheta/2pi = b_0 + 2 sum_{n>=1} b_n z^n
// for real Q given through its samples.
Complex poisson_transform(const PeriodicSamples& samples, Complex z);

// Samples of a function on the m-point grid.
PeriodicSamples sample_periodic(const std::function<Complex(double)>& evaluator, std::size_t m);

}  // namespace opuc

#endif
