#include "opuc/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace opuc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_pow2(std::size_t m) { return m != 0 && (m & (m - 1)) == 0; }

}  // namespace

PeriodicSamples::PeriodicSamples(std::size_t grid, std::vector<Complex> vals)
    : m(grid), values(std::move(vals)) {
  if (!is_pow2(m) || m < 8 || m > kGridCap)
    throw std::invalid_argument("grid size must be a power of two in [8, 2^20]");
  if (values.size() != m) throw std::invalid_argument("sample count does not match grid size");
}

IntegralResult periodic_mean(const std::function<Complex(double)>& evaluator, double atol) {
  auto probe = [&](double theta) {
    Complex v = evaluator(theta);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::domain_error("non-finite sample at theta = " + std::to_string(theta));
    return v;
  };

  std::size_t m = kGridStart;
  Complex sum{};
  for (std::size_t k = 0; k < m; ++k) sum += probe(kTwoPi * static_cast<double>(k) / static_cast<double>(m));
  Complex prev = sum / static_cast<double>(m);

  while (true) {
    // New points are the midpoints of the current grid.
    const std::size_t m2 = 2 * m;
    for (std::size_t k = 0; k < m; ++k)
      sum += probe(kTwoPi * (2.0 * static_cast<double>(k) + 1.0) / static_cast<double>(m2));
    m = m2;
    const Complex cur = sum / static_cast<double>(m);
    const double err = std::abs(cur - prev);
    if (err < atol) return {cur, err, m};
    if (m >= kGridCap)
      throw QuadratureError("periodic_mean did not converge at grid cap 2^20", cur, prev);
    prev = cur;
  }
}

namespace {

struct AdaptiveState {
  const std::function<Complex(double)>* probe = nullptr;
  std::size_t evals = 0;
  double err_acc = 0.0;

  Complex eval(double theta) {
    ++evals;
    const Complex v = (*probe)(theta);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::domain_error("non-finite sample at theta = " + std::to_string(theta));
    return v;
  }
};

// One panel [a, b] with endpoint/midpoint values supplied; whole = Simpson
// estimate over the panel. tol is this panel's share of the absolute budget.
Complex adaptive_panel(AdaptiveState& st, double a, double b, Complex fa, Complex fm, Complex fb,
                       Complex whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double h = b - a;
  const Complex fl = st.eval(0.5 * (a + m));
  const Complex fr = st.eval(0.5 * (m + b));
  const Complex left = (h / 12.0) * (fa + 4.0 * fl + fm);
  const Complex right = (h / 12.0) * (fm + 4.0 * fr + fb);
  const Complex split = left + right;
  const double diff = std::abs(split - whole);
  // Panels below h = 1e-13 are at floating-point granularity: the midpoint
  // collides with an endpoint and the comparison is meaningless. Accepting
  // them costs at most ~|f| * 1e-13 of absolute error per spike.
  if (diff <= 15.0 * tol || h <= 1e-13) {
    st.err_acc += diff / 15.0;
    return split + (split - whole) / 15.0;
  }
  if (depth >= 48)
    throw QuadratureError("adaptive_mean hit the bisection depth cap", split, whole);
  return adaptive_panel(st, a, m, fa, fl, fm, left, 0.5 * tol, depth + 1) +
         adaptive_panel(st, m, b, fm, fr, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace

IntegralResult adaptive_mean(const std::function<Complex(double)>& evaluator, double atol) {
  AdaptiveState st;
  st.probe = &evaluator;

  // Seed with 16 panels so structure away from a single spike is seen early.
  constexpr int kPanels = 16;
  Complex total{};
  const double width = kTwoPi / kPanels;
  std::vector<Complex> ends(kPanels + 1);
  for (int i = 0; i <= kPanels; ++i) ends[i] = st.eval(i == kPanels ? 0.0 : width * i);
  for (int i = 0; i < kPanels; ++i) {
    const double a = width * i;
    const double b = a + width;
    const Complex fm = st.eval(0.5 * (a + b));
    const Complex whole = (width / 6.0) * (ends[i] + 4.0 * fm + ends[i + 1]);
    total += adaptive_panel(st, a, b, ends[i], fm, ends[i + 1], whole,
                            atol * kTwoPi / kPanels, 0);
  }
  return {total / kTwoPi, st.err_acc / kTwoPi, st.evals};
}

IntegralResult entropy_functional(const std::function<double(double)>& weight_eval,
                                  const SingularityProfile& profile, double atol) {
  auto integrand = [&](double theta) -> Complex {
    const double w = weight_eval(theta);
    if (!(w > 0.0))
      throw std::domain_error("nonpositive weight sample at theta = " + std::to_string(theta));
    return Complex{profile.weight(theta) * std::log(w), 0.0};
  };
  return periodic_mean(integrand, atol);
}

Complex fourier_coeff(const PeriodicSamples& samples, std::int64_t n) {
  if (static_cast<std::size_t>(2 * std::llabs(n)) >= samples.m)
    throw std::invalid_argument("fourier_coeff: |n| must be < m/2 (aliasing guard)");
  Complex acc{};
  const double step = kTwoPi / static_cast<double>(samples.m);
  for (std::size_t k = 0; k < samples.m; ++k)
    acc += samples.values[k] * std::polar(1.0, -static_cast<double>(n) * step * static_cast<double>(k));
  return acc / static_cast<double>(samples.m);
}

Complex poisson_transform(const PeriodicSamples& samples, Complex z) {
  if (std::abs(z) > 1.0 - 1e-6)
    throw std::domain_error("poisson_transform requires |z| <= 1 - 1e-6");
  double max_q = 0.0;
  for (const auto& v : samples.values) max_q = std::max(max_q, std::abs(v));

  Complex result = fourier_coeff(samples, 0);
  const double r = std::abs(z);
  Complex zn = z;
  for (std::size_t n = 1; 2 * n < samples.m; ++n) {
    result += 2.0 * fourier_coeff(samples, static_cast<std::int64_t>(n)) * zn;
    // Tail bound: |b_k| <= max|Q|, so the remainder is below 2 max|Q| r^{n+1}/(1-r).
    if (2.0 * max_q * std::pow(r, static_cast<double>(n + 1)) / (1.0 - r) < 1e-16) break;
    zn *= z;
  }
  return result;
}

PeriodicSamples sample_periodic(const std::function<Complex(double)>& evaluator, std::size_t m) {
  std::vector<Complex> vals(m);
  for (std::size_t k = 0; k < m; ++k)
    vals[k] = evaluator(kTwoPi * static_cast<double>(k) / static_cast<double>(m));
  return PeriodicSamples(m, std::move(vals));
}

}  // namespace opuc
