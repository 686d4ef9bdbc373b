#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "opuc/polynomials.hpp"
#include "opuc/quadrature.hpp"
#include "opuc/relative_szego.hpp"
#include "opuc/schur.hpp"
#include "opuc/weights.hpp"

using namespace opuc;
using doctest::Approx;

namespace {

constexpr double pi = std::numbers::pi;

VerblunskySequence random_seq(std::mt19937_64& rng, std::size_t n, double radius) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Complex> vals(n);
  for (auto& v : vals) v = std::polar(radius * std::sqrt(unit(rng)), 2.0 * pi * unit(rng));
  return VerblunskySequence(std::move(vals));
}

}  // namespace

TEST_CASE("szego_recursion base cases") {
  const VerblunskySequence empty;
  const auto p0 = szego_recursion(empty, 0);
  CHECK(p0.phi == std::vector<Complex>{Complex{1, 0}});
  CHECK(p0.phi_star == std::vector<Complex>{Complex{1, 0}});

  const VerblunskySequence half(std::vector<Complex>{{0.5, 0}});
  const auto p1 = szego_recursion(half, 1);
  // Phi_1 = z - 1/2, Phi_1* = 1 - z/2
  CHECK(p1.phi[0].real() == Approx(-0.5));
  CHECK(p1.phi[1].real() == Approx(1.0));
  CHECK(p1.phi_star[0].real() == Approx(1.0));
  CHECK(p1.phi_star[1].real() == Approx(-0.5));

  const auto p3 = szego_recursion(empty, 3);  // free case: Phi_3 = z^3
  CHECK(p3.phi == std::vector<Complex>{{0, 0}, {0, 0}, {0, 0}, {1, 0}});
  CHECK(p3.eval_phi_star(Complex{0.3, 0.7}) == Complex{1, 0});
}

TEST_CASE("coefficient-reversal invariant of the pair") {
  std::mt19937_64 rng(17);
  const auto seq = random_seq(rng, 6, 0.9);
  const auto pair = szego_recursion(seq, 6);
  REQUIRE(pair.phi.size() == 7);
  for (std::size_t j = 0; j < 7; ++j) {
    const Complex reversed = std::conj(pair.phi[6 - j]);
    CHECK(std::abs(pair.phi_star[j] - reversed) < 1e-15);
  }
  // All zeros of Phi_n inside the disk: |Phi_n*| stays away from 0 on the circle.
  for (int k = 0; k < 64; ++k)
    CHECK(std::abs(pair.eval_phi_star(std::polar(1.0, 2.0 * pi * k / 64.0))) > 1e-6);
}

TEST_CASE("bs_weight_eval") {
  const VerblunskySequence zero;
  const BernsteinSzegoWeight lebesgue(zero, 0);
  CHECK(lebesgue.eval(0.7) == Approx(1.0));

  const VerblunskySequence half(std::vector<Complex>{{0.5, 0}});
  const BernsteinSzegoWeight w(half, 1);
  CHECK(w.eval(0.0) == Approx(3.0));        // 0.75 / |1 - 1/2|^2
  CHECK(w.eval(pi) == Approx(1.0 / 3.0));   // 0.75 / 2.25
}

TEST_CASE("bs_weight normalization: probability measure") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    const auto seq = random_seq(rng, 7, 0.9);
    const BernsteinSzegoWeight w(seq, 7);
    auto mass = periodic_mean([&](double t) { return Complex{w.eval(t), 0}; }, 1e-11);
    CHECK(mass.real() == Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("schur_eval") {
  const SchurFunctionRep zero{VerblunskySequence{}};
  CHECK(schur_eval(zero, Complex{0.3, 0.2}) == Complex{});

  const SchurFunctionRep constant{VerblunskySequence(std::vector<Complex>{{0.25, 0.5}})};
  CHECK(schur_eval(constant, Complex{0.7, 0.1}) == Complex{0.25, 0.5});

  const SchurFunctionRep two{VerblunskySequence(std::vector<Complex>{{0.5, 0}, {0.5, 0}})};
  CHECK(schur_eval(two, Complex{0.5, 0}).real() == Approx(2.0 / 3.0));

  CHECK_THROWS_AS(schur_eval(zero, Complex{1.0, 0.0}), std::domain_error);
}

TEST_CASE("caratheodory_eval") {
  const SchurFunctionRep zero{VerblunskySequence{}};
  CHECK(caratheodory_eval(zero, Complex{0.4, -0.2}) == Complex{1, 0});

  const SchurFunctionRep half{VerblunskySequence(std::vector<Complex>{{0.5, 0}})};
  CHECK(caratheodory_eval(half, Complex{}) == Complex{1, 0});
  CHECK(caratheodory_eval(half, Complex{0.5, 0}).real() == Approx(5.0 / 3.0));
}

TEST_CASE("schur bound and positive real part over random draws") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto seq = random_seq(rng, 5, 0.95);
    const SchurFunctionRep rep{seq};
    const Complex z = std::polar(0.99 * std::sqrt(unit(rng)), 2.0 * pi * unit(rng));
    CHECK(std::abs(schur_eval(rep, z)) < 1.0);
    CHECK(caratheodory_eval(rep, z).real() > 0.0);
  }
}

TEST_CASE("caratheodory_from_measure agrees with the Schur pipeline") {
  const VerblunskySequence zero;
  const BernsteinSzegoWeight lebesgue(zero, 0);
  CHECK(caratheodory_from_measure(lebesgue, Complex{0.3, 0}).real() == Approx(1.0).epsilon(1e-12));

  const VerblunskySequence half(std::vector<Complex>{{0.5, 0}});
  const BernsteinSzegoWeight w(half, 1);
  const Complex via_measure = caratheodory_from_measure(w, Complex{0.3, 0});
  const Complex via_schur = caratheodory_eval(SchurFunctionRep{half}, Complex{0.3, 0});
  CHECK(std::abs(via_measure - via_schur) < 1e-10);
  CHECK(std::abs(caratheodory_from_measure(w, Complex{}) - Complex{1, 0}) < 1e-12);

  std::mt19937_64 rng(37);
  const auto seq = random_seq(rng, 4, 0.8);
  const BernsteinSzegoWeight wr(seq, 4);
  const Complex z{-0.2, 0.35};
  CHECK(std::abs(caratheodory_from_measure(wr, z) - caratheodory_eval(SchurFunctionRep{seq}, z)) <
        1e-10);
}

TEST_CASE("relative_szego_eval") {
  const VerblunskySequence zero;
  CHECK(std::abs(relative_szego_eval(zero, Complex{0.4, 0.3}) - Complex{1, 0}) < 1e-15);

  const VerblunskySequence half(std::vector<Complex>{{0.5, 0}});
  CHECK(relative_szego_eval(half, Complex{}).real() == Approx(std::sqrt(3.0) / 2.0));
  CHECK(relative_szego_eval(half, Complex{0.5, 0}).real() ==
        Approx(std::sqrt(3.0) / 2.0 / 0.75));  // rho_0 / (1 - z/2)
  CHECK(relative_szego_eval(half, Complex{0.5, 0}).real() == Approx(1.154701).epsilon(1e-6));
}

TEST_CASE("taylor_A closed form") {
  const TaylorA z = taylor_A(VerblunskySequence{});
  CHECK(z.a0 == 0.0);
  CHECK(z.a1 == Complex{});
  CHECK(z.a2 == Complex{});

  const TaylorA h = taylor_A(VerblunskySequence(std::vector<Complex>{{0.5, 0}}));
  CHECK(h.a0 == Approx(0.5 * std::log(0.75)));
  CHECK(h.a1.real() == Approx(0.5));
  CHECK(h.a2.real() == Approx(0.125));

  const TaylorA t = taylor_A(VerblunskySequence(std::vector<Complex>{{0, 0}, {1.0 / 3.0, 0}}));
  CHECK(t.a0 == 0.0);
  CHECK(t.a1.real() == Approx(-1.0 / 3.0));
  CHECK(t.a2.real() == Approx(5.0 / 18.0));  // -(1/2)(1/9) + 1/3
}

TEST_CASE("taylor_A_numeric contour extraction matches the closed form") {
  const TaylorA z = taylor_A_numeric(VerblunskySequence{});
  CHECK(std::abs(z.a0) < 1e-12);
  CHECK(std::abs(z.a1) < 1e-12);
  CHECK(std::abs(z.a2) < 1e-12);

  const VerblunskySequence half(std::vector<Complex>{{0.5, 0}});
  const TaylorA a = taylor_A(half);
  const TaylorA n = taylor_A_numeric(half);
  CHECK(std::abs(a.a0 - n.a0) < 1e-10);
  CHECK(std::abs(a.a1 - n.a1) < 1e-10);
  CHECK(std::abs(a.a2 - n.a2) < 1e-10);

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const auto seq = random_seq(rng, 5, 0.9);
    const TaylorA c = taylor_A(seq);
    const TaylorA m = taylor_A_numeric(seq);
    CHECK(std::abs(c.a0 - m.a0) < 1e-8);
    CHECK(std::abs(c.a1 - m.a1) < 1e-8);
    CHECK(std::abs(c.a2 - m.a2) < 1e-8);
  }
}

TEST_CASE("step_fourier_check") {
  CHECK(step_fourier_check(VerblunskySequence(std::vector<Complex>(4, Complex{})), 4) < 1e-13);

  // n=1 with a single coefficient: w_1 is flat, the mean is 2 A0 = log(3/4).
  const VerblunskySequence half(std::vector<Complex>{{0.5, 0}});
  const BernsteinSzegoWeight w(half, 1);
  auto mean = periodic_mean([&](double t) { return Complex{std::log(w.eval(t)), 0}; }, 1e-12);
  CHECK(mean.real() == Approx(std::log(0.75)).epsilon(1e-10));

  std::mt19937_64 rng(43);
  const auto seq = random_seq(rng, 6, 0.85);
  CHECK(step_fourier_check(seq, 6) < 1e-9);
  CHECK_THROWS_AS(step_fourier_check(seq, 2), std::invalid_argument);
}

TEST_CASE("Szego identity: coefficient product vs entropy of the truncated weight") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    const auto seq = random_seq(rng, 8, 0.9);
    double lhs = 0.0;
    for (int j = 0; j < 8; ++j) lhs += std::log(1.0 - std::norm(seq.at(j)));
    const BernsteinSzegoWeight w(seq, 8);
    // atol 1e-9: sequences drawn near radius 0.9 can put a polynomial zero
    // close to the circle, and the doubling certificate stalls well above
    // 1e-11 even though the converged value is far more accurate.
    auto rhs = periodic_mean([&](double t) { return Complex{std::log(w.eval(t)), 0}; }, 1e-9);
    CHECK(std::abs(lhs - rhs.real()) < 1e-9);
  }
}

TEST_CASE("relative Szego function from the half-Poisson transform") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 5; ++trial) {
    const auto seq = random_seq(rng, 6, 0.8);
    const BernsteinSzegoWeight w(seq, 6);
    const BernsteinSzegoWeight w1 = BernsteinSzegoWeight::shifted(seq, 6, 1);
    // 2^16 samples: the log-ratio can be sharply peaked, and the aliasing
    // error of the Fourier coefficients decays like exp(-m d) in the distance
    // d from the nearest polynomial zero to the circle.
    auto samples = sample_periodic(
        [&](double t) { return Complex{std::log(w.eval(t) / w1.eval(t)), 0}; }, 65536);
    for (const Complex z : {Complex{0.5, 0}, Complex{0.2, -0.4}, Complex{-0.3, 0.1}}) {
      const Complex via_poisson = std::exp(0.5 * poisson_transform(samples, z));
      CHECK(std::abs(via_poisson - relative_szego_eval(seq, z)) < 1e-8);
    }
  }
}

TEST_CASE("schur_recover roundtrip") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    const auto seq = random_seq(rng, 8, 0.9);
    const auto rec = schur_recover(SchurFunctionRep{seq}, 8);
    for (int j = 0; j < 8; ++j) CHECK(std::abs(rec[j] - seq.at(j)) < 1e-9);
  }
}
