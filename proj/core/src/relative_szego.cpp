#include "opuc/relative_szego.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "opuc/quadrature.hpp"
#include "opuc/weights.hpp"

namespace opuc {

Complex relative_szego_eval(const VerblunskySequence& seq, Complex z) {
  const SchurFunctionRep full{seq};
  const SchurFunctionRep tail{VerblunskySequence(shift(seq))};
  const Complex f = schur_eval(full, z);
  const Complex f1 = schur_eval(tail, z);
  const double rho0 = seq.rho(0);
  return (1.0 - std::conj(seq.at(0)) * f) / rho0 * (1.0 - z * f1) / (1.0 - z * f);
}

TaylorA taylor_A(const VerblunskySequence& seq) {
  const Complex a0 = seq.at(0), a1 = seq.at(1), a2 = seq.at(2);
  const double rho1_sq = 1.0 - std::norm(a1);
  TaylorA out;
  out.a0 = 0.5 * std::log(1.0 - std::norm(a0));
  out.a1 = a0 - a1 - std::conj(a0) * a1;
  out.a2 = 0.5 * a0 * a0 - 0.5 * a1 * a1 + a1 - a2 - a1 * std::norm(a0) + a2 * std::norm(a1) -
           std::conj(a0) * a2 * rho1_sq + 0.5 * std::conj(a0) * std::conj(a0) * a1 * a1;
  return out;
}

TaylorA taylor_A_numeric(const VerblunskySequence& seq) {
  constexpr double r = 0.25;
  constexpr std::size_t m = 256;
  constexpr double two_pi = 2.0 * std::numbers::pi;

  // Continuous branch of the logarithm along the contour.
  std::vector<Complex> logs(m);
  double offset = 0.0;
  Complex prev{};
  for (std::size_t k = 0; k < m; ++k) {
    const Complex z = std::polar(r, two_pi * static_cast<double>(k) / static_cast<double>(m));
    const Complex v = relative_szego_eval(seq, z);
    Complex lg = std::log(v);
    if (k > 0) {
      double jump = lg.imag() + offset - prev.imag();
      while (jump > std::numbers::pi) { offset -= two_pi; jump -= two_pi; }
      while (jump < -std::numbers::pi) { offset += two_pi; jump += two_pi; }
    }
    lg += Complex{0.0, offset};
    logs[k] = lg;
    prev = lg;
  }
  // Closing the contour must return to the starting branch.
  double closure = logs.front().imag() - logs.back().imag();
  closure = std::remainder(closure, two_pi);
  if (std::abs(offset - 0.0) > 1e-9 || std::abs(closure) > 1.0)
    throw std::runtime_error("taylor_A_numeric: logarithm winds along the contour");

  PeriodicSamples samples(m, std::move(logs));
  TaylorA out;
  out.a0 = fourier_coeff(samples, 0).real();
  out.a1 = fourier_coeff(samples, 1) / r;
  out.a2 = fourier_coeff(samples, 2) / (r * r);
  return out;
}

double step_fourier_check(const VerblunskySequence& seq, std::size_t n, double atol) {
  if (n < 3) throw std::invalid_argument("step_fourier_check requires n >= 3");
  const BernsteinSzegoWeight w(seq, n);
  const BernsteinSzegoWeight w1 = BernsteinSzegoWeight::shifted(seq, n, 1);
  auto log_ratio = [&](double theta) { return std::log(w.eval(theta) / w1.eval(theta)); };

  const TaylorA A = taylor_A(seq);
  const Complex expected[5] = {Complex{2.0 * A.a0, 0.0}, A.a1, A.a2, std::conj(A.a1),
                               std::conj(A.a2)};
  const std::int64_t orders[5] = {0, 1, 2, -1, -2};

  double max_dev = 0.0;
  for (int i = 0; i < 5; ++i) {
    const std::int64_t ord = orders[i];
    auto integrand = [&](double theta) -> Complex {
      return log_ratio(theta) * std::polar(1.0, -static_cast<double>(ord) * theta);
    };
    const Complex b = periodic_mean(integrand, atol).value;
    max_dev = std::max(max_dev, std::abs(b - expected[i]));
  }
  return max_dev;
}

}  // namespace opuc
