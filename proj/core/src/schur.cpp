#include "opuc/schur.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "opuc/quadrature.hpp"

namespace opuc {

namespace {

void check_disk(Complex z, double guard) {
  if (std::abs(z) > 1.0 - guard)
    throw std::domain_error("evaluation point too close to the unit circle");
}

}  // namespace

Complex schur_eval(const SchurFunctionRep& rep, Complex z) {
  check_disk(z, 1e-9);
  Complex f{};
  const auto& a = rep.params.values();
  for (auto it = a.rbegin(); it != a.rend(); ++it)
    f = (*it + z * f) / (1.0 + z * std::conj(*it) * f);
  return f;
}

Complex caratheodory_eval(const SchurFunctionRep& rep, Complex z) {
  const Complex zf = z * schur_eval(rep, z);
  return (1.0 + zf) / (1.0 - zf);
}

Complex caratheodory_from_measure(const BernsteinSzegoWeight& weight, Complex z, double atol) {
  if (std::abs(z) > 1.0 - 1e-6)
    throw std::domain_error("caratheodory_from_measure requires |z| <= 1 - 1e-6");
  auto integrand = [&](double theta) -> Complex {
    const Complex e = std::polar(1.0, theta);
    return (e + z) / (e - z) * weight.eval(theta);
  };
  return periodic_mean(integrand, atol).value;
}

std::vector<Complex> schur_recover(const SchurFunctionRep& rep, std::size_t count, double radius,
                                   std::size_t samples) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  std::vector<Complex> z(samples), f(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    z[k] = std::polar(radius, two_pi * static_cast<double>(k) / static_cast<double>(samples));
    f[k] = schur_eval(rep, z[k]);
  }
  std::vector<Complex> recovered(count);
  for (std::size_t level = 0; level < count; ++level) {
    // Mean over equispaced points on the circle equals the value at 0 up to
    // O(radius^samples) for a function analytic in the disk.
    Complex a{};
    for (const auto& v : f) a += v;
    a /= static_cast<double>(samples);
    recovered[level] = a;
    for (std::size_t k = 0; k < samples; ++k)
      f[k] = (f[k] - a) / (z[k] * (1.0 - std::conj(a) * f[k]));
  }
  return recovered;
}

}  // namespace opuc
