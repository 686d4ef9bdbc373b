#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "opuc/quadrature.hpp"
#include "opuc/relative_szego.hpp"
#include "opuc/sum_rules.hpp"
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

TEST_CASE("antipodal_terms hand values") {
  const VerblunskySequence zero(std::vector<Complex>(3, Complex{}));
  const AntipodalTerms z = antipodal_terms(zero, 0);
  CHECK(z.b == 0.0);
  CHECK(z.c == 0.0);
  CHECK(z.d == 0.0);
  CHECK(z.f == 0.0);
  CHECK(z.g == 0.0);

  const VerblunskySequence half(std::vector<Complex>{{0.5, 0}, {0, 0}, {0, 0}});
  const AntipodalTerms t = antipodal_terms(half, 0);
  CHECK(t.b == Approx(-0.0032158).epsilon(2e-4));
  CHECK(t.c == Approx(-1.0 / 16.0));
  CHECK(t.d == Approx(-1.0 / 128.0));
  CHECK(t.f == Approx(-9.0 / 128.0));
  CHECK(t.g == Approx(-1.0 / 16.0));

  const VerblunskySequence imag(std::vector<Complex>{{0, 0}, {0, 0.5}, {0, 0}});
  const AntipodalTerms u = antipodal_terms(imag, 0);
  CHECK(u.b == 0.0);
  CHECK(u.c == 0.0);
  CHECK(u.d == Approx(-1.0 / 128.0));
  CHECK(u.f == 0.0);
  CHECK(u.g == 0.0);
}

TEST_CASE("antipodal term sign constraints") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto seq = random_seq(rng, 4, 0.95);
    const AntipodalTerms t = antipodal_terms(seq, 0);
    CHECK(t.b <= 0.0);
    CHECK(t.c <= 0.0);
    CHECK(t.d <= 0.0);
  }
}

TEST_CASE("antipodal_identity") {
  CHECK(antipodal_identity(VerblunskySequence(std::vector<Complex>(4, Complex{}))) == 0.0);

  const VerblunskySequence half(std::vector<Complex>{{0.5, 0}, {0, 0}, {0, 0}});
  const TaylorA A = taylor_A(half);
  CHECK(A.a0 - 0.5 * A.a2.real() == Approx(-0.2063410).epsilon(1e-6));
  CHECK(antipodal_identity(half) < 1e-14);

  std::mt19937_64 rng(67);
  double worst = 0.0;
  for (int trial = 0; trial < 10000; ++trial)
    worst = std::max(worst, antipodal_identity(random_seq(rng, 5, 0.95)));
  CHECK(worst < 1e-12);
}

TEST_CASE("order2_identity") {
  const auto zero = order2_identity(VerblunskySequence(std::vector<Complex>(4, Complex{})));
  CHECK(zero.plain == 0.0);
  CHECK(zero.tilde == 0.0);

  const VerblunskySequence half(std::vector<Complex>{{0.5, 0}, {0, 0}, {0, 0}});
  const TaylorA A = taylor_A(half);
  const double lhs = 3.0 * A.a0 - 2.0 * A.a1.real() + 0.5 * A.a2.real();
  CHECK(lhs == Approx(1.5 * std::log(0.75) - 1.0 + 1.0 / 16.0).epsilon(1e-12));
  CHECK(lhs == Approx(-1.369023).epsilon(1e-6));
  const auto r = order2_identity(half);
  CHECK(r.plain < 1e-14);
  CHECK(r.tilde < 1e-14);

  std::mt19937_64 rng(71);
  double worst_plain = 0.0, worst_tilde = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const auto res = order2_identity(random_seq(rng, 5, 0.95));
    worst_plain = std::max(worst_plain, res.plain);
    worst_tilde = std::max(worst_tilde, res.tilde);
  }
  CHECK(worst_plain < 1e-12);
  CHECK(worst_tilde < 1e-12);
}

TEST_CASE("antipodal_iterated ledger") {
  SUBCASE("zero sequence") {
    const auto l = antipodal_iterated(VerblunskySequence(std::vector<Complex>(6, Complex{})), 4,
                                      1e-11);
    CHECK(std::abs(l.lhs.real()) < 1e-12);
    CHECK(std::abs(l.rhs_total()) < 1e-15);
    CHECK(std::abs(l.residual) < 1e-12);
  }
  SUBCASE("support below m: full weighted entropy") {
    std::mt19937_64 rng(73);
    const auto seq = random_seq(rng, 3, 0.8);
    const auto l = antipodal_iterated(seq, 6, 1e-11);
    const BernsteinSzegoWeight w(seq, 3);
    const auto full = entropy_functional([&](double t) { return w.eval(t); },
                                         SingularityProfile({{0.0, 1}, {pi, 1}}), 1e-11);
    CHECK(l.lhs.real() == Approx(full.real()).epsilon(1e-9));
    CHECK(std::abs(l.residual) < 1e-9);
  }
  SUBCASE("random length-10, all even m") {
    std::mt19937_64 rng(79);
    const auto seq = random_seq(rng, 10, 0.8);
    for (std::size_t m : {2u, 4u, 6u, 8u}) {
      const auto l = antipodal_iterated(seq, m, 1e-11);
      CHECK(std::abs(l.residual) < 1e-9);
    }
  }
  CHECK_THROWS_AS(antipodal_iterated(VerblunskySequence{}, 3, 1e-9), std::invalid_argument);
}

TEST_CASE("order2_iterated ledger") {
  SUBCASE("zero sequence") {
    const auto l = order2_iterated(VerblunskySequence(std::vector<Complex>(6, Complex{})), 4, 1e-11);
    CHECK(std::abs(l.residual) < 1e-12);
  }
  SUBCASE("support below m") {
    std::mt19937_64 rng(83);
    const auto seq = random_seq(rng, 3, 0.8);
    const auto l = order2_iterated(seq, 6, 1e-11);
    CHECK(std::abs(l.residual) < 1e-9);
  }
  SUBCASE("random length-10, m = 6") {
    std::mt19937_64 rng(89);
    const auto seq = random_seq(rng, 10, 0.8);
    const auto l = order2_iterated(seq, 6, 1e-11);
    CHECK(std::abs(l.residual) < 1e-9);
  }
}

TEST_CASE("telescoping: iterated ledgers equal summed one-step identities") {
  // Pure algebra: the one-step decomposition applied to each shifted sequence
  // must sum to the iterated right-hand side exactly.
  std::mt19937_64 rng(97);
  const auto seq = random_seq(rng, 10, 0.9);
  const std::size_t m = 6;

  double summed = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<Complex> tail;
    for (std::size_t j = k; j < seq.size(); ++j) tail.push_back(seq.at(static_cast<std::int64_t>(j)));
    const VerblunskySequence shifted(std::move(tail));
    const TaylorA A = taylor_A(shifted);
    summed += A.a0 - 0.5 * A.a2.real();
  }
  double rhs = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const AntipodalTerms t = antipodal_terms(seq, static_cast<std::int64_t>(j));
    rhs += t.b + t.c + t.d;
  }
  const AntipodalTerms t0 = antipodal_terms(seq, 0);
  const AntipodalTerms t1 = antipodal_terms(seq, 1);
  const AntipodalTerms tm = antipodal_terms(seq, static_cast<std::int64_t>(m));
  const AntipodalTerms tm1 = antipodal_terms(seq, static_cast<std::int64_t>(m) + 1);
  rhs += t0.f - tm.f + t0.g + t1.g - tm.g - tm1.g;
  CHECK(summed == Approx(rhs).epsilon(1e-13));

  double summed2 = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<Complex> tail;
    for (std::size_t j = k; j < seq.size(); ++j) tail.push_back(seq.at(static_cast<std::int64_t>(j)));
    const TaylorA A = taylor_A(VerblunskySequence(std::move(tail)));
    summed2 += 3.0 * A.a0 - 2.0 * A.a1.real() + 0.5 * A.a2.real();
  }
  double rhs2 = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const Order2Terms t = order2_terms(seq, static_cast<std::int64_t>(j));
    rhs2 += t.ht + t.it + t.jt;
  }
  const Order2Terms o0 = order2_terms(seq, 0);
  const Order2Terms o1 = order2_terms(seq, 1);
  const Order2Terms om = order2_terms(seq, static_cast<std::int64_t>(m));
  const Order2Terms om1 = order2_terms(seq, static_cast<std::int64_t>(m) + 1);
  rhs2 += o0.kt - om.kt + o0.lt + o1.lt - om.lt - om1.lt;
  CHECK(summed2 == Approx(rhs2).epsilon(1e-12));
}

TEST_CASE("twopoint_I1") {
  CHECK(twopoint_I1(VerblunskySequence(std::vector<Complex>(3, Complex{})), 0.3, 2.1) == 0.0);

  const VerblunskySequence half(std::vector<Complex>{{0.5, 0}, {0, 0}, {0, 0}});
  CHECK(twopoint_I1(half, 0.0, pi) == Approx(-0.2063410).epsilon(1e-6));

  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * pi);
  for (int trial = 0; trial < 5; ++trial) {
    const auto seq = random_seq(rng, 5, 0.7);
    const double th1 = angle(rng);
    double th2 = angle(rng);
    while (std::abs(std::remainder(th1 - th2, 2.0 * pi)) < 0.3) th2 = angle(rng);
    const BernsteinSzegoWeight w(seq, 5);
    const BernsteinSzegoWeight w1 = BernsteinSzegoWeight::shifted(seq, 5, 1);
    const SingularityProfile profile({{th1, 1}, {th2, 1}});
    auto quad = periodic_mean(
        [&](double t) {
          return Complex{profile.weight(t) * std::log(w.eval(t) / w1.eval(t)), 0};
        },
        1e-12);
    CHECK(std::abs(twopoint_I1(seq, th1, th2) - quad.real()) < 1e-9);
  }
  CHECK_THROWS_AS(twopoint_I1(half, 0.4, 0.4), std::invalid_argument);
}

TEST_CASE("twopoint_terms gauge data") {
  std::mt19937_64 rng(103);
  const auto seq = random_seq(rng, 8, 0.8);
  const double th1 = 0.9, th2 = 2.2;
  const TwoPointData d = twopoint_terms(seq, th1, th2, 6);
  CHECK(d.a == Approx(std::cos((th1 - th2) / 2.0)));
  for (int j = 0; j < 6; ++j) {
    CHECK(std::abs(std::abs(d.beta.at(j)) - std::abs(seq.at(j))) < 1e-15);
    CHECK(std::abs(d.gamma.at(j) - (d.beta.at(j + 2) - 2.0 * d.a * d.beta.at(j + 1) +
                                    d.beta.at(j))) < 1e-15);
  }
}

TEST_CASE("twopoint_ledger") {
  SUBCASE("zero sequence") {
    const auto l = twopoint_ledger(VerblunskySequence(std::vector<Complex>(6, Complex{})), 0.5, 2.5,
                                   4, 1e-11);
    CHECK(std::abs(l.rhs_total()) < 1e-15);
    CHECK(std::abs(l.residual) < 1e-11);
  }
  SUBCASE("interior-perturbation invariance of the residual") {
    std::mt19937_64 rng(107);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto base = random_seq(rng, 16, 0.6);
    std::vector<Complex> perturbed = base.values();
    for (std::size_t j = 5; j < 10; ++j)
      perturbed[j] = std::polar(0.6 * std::sqrt(unit(rng)), 2.0 * pi * unit(rng));
    const double th1 = 0.4, th2 = 1.9;
    const auto l1 = twopoint_ledger(base, th1, th2, 14, 1e-12);
    const auto l2 = twopoint_ledger(VerblunskySequence(std::move(perturbed)), th1, th2, 14, 1e-12);
    CHECK(std::abs(l1.residual - l2.residual) < 1e-9);
  }
  SUBCASE("a = 0 reduces the sums to the antipodal B+C+D") {
    std::mt19937_64 rng(109);
    const auto seq = random_seq(rng, 6, 0.8);  // support 6 <= m-2 keeps shifts harmless
    const std::size_t m = 10;
    const TwoPointData d = twopoint_terms(seq, 0.0, pi, m);
    CHECK(std::abs(d.a) < 1e-15);
    double bcd = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const AntipodalTerms t = antipodal_terms(seq, static_cast<std::int64_t>(j));
      bcd += t.b + t.c + t.d;
    }
    // The forward sum counts the adjacent pair (0,1) once while the D family
    // counts every adjacent pair twice, leaving one boundary product at j = 0.
    const double boundary = 0.25 * std::norm(seq.at(0)) * std::norm(seq.at(1));
    CHECK(d.total() == Approx(bcd + boundary).epsilon(1e-12));
  }
}

TEST_CASE("rhs_general") {
  const SingularityProfile single({{0.0, 1}});
  CHECK(rhs_general(VerblunskySequence(std::vector<Complex>(4, Complex{})), single) ==
        std::vector<double>{0, 0, 0, 0});

  const VerblunskySequence halves(std::vector<Complex>{{0.5, 0}, {0.5, 0}});
  const auto sums = rhs_general(halves, single);
  REQUIRE(sums.size() == 2);
  CHECK(sums[0] == Approx(1.0 / 16.0));
  CHECK(sums[1] == Approx(1.0 / 8.0));

  const SingularityProfile dbl({{0.0, 2}});
  const VerblunskySequence geo(std::vector<Complex>{{0.5, 0}, {0.25, 0}, {0.125, 0}});
  const auto s2 = rhs_general(geo, dbl);
  CHECK(s2[0] == Approx(1.0 / 32.0));  // |1/8 - 1/2 + 1/2|^2 + (1/2)^6

  SUBCASE("partial sums are monotone") {
    std::mt19937_64 rng(113);
    const auto seq = random_seq(rng, 12, 0.9);
    const auto s = rhs_general(seq, SingularityProfile({{0.3, 1}, {2.0, 2}}));
    for (std::size_t j = 1; j < s.size(); ++j) CHECK(s[j] >= s[j - 1]);
  }
}

TEST_CASE("lower_bound_check") {
  SUBCASE("zero sequence holds with zero slack") {
    const auto r = lower_bound_check(VerblunskySequence(std::vector<Complex>(8, Complex{})), 0.4,
                                     1.7, 4);
    CHECK(r.holds);
    CHECK(std::abs(r.slack) < 1e-10);
  }
  SUBCASE("power family") {
    FamilySpec spec;
    spec.kind = FamilySpec::Kind::Power;
    spec.c = 0.3;
    spec.p = 1.0 / 3.0;
    spec.length = 24;
    const auto r = lower_bound_check(generate(spec), 0.0, 2.0 * pi / 3.0, 20);
    CHECK(r.holds);
  }
  SUBCASE("random radius-0.4 draws") {
    std::mt19937_64 rng(127);
    for (int trial = 0; trial < 20; ++trial) {
      const auto seq = random_seq(rng, 10, 0.4);
      const auto r = lower_bound_check(seq, 0.7, 2.6, 8);
      CHECK(r.holds);
    }
  }
  SUBCASE("precondition rejections") {
    const VerblunskySequence big(std::vector<Complex>{{0.8, 0}});
    CHECK_THROWS_AS(lower_bound_check(big, 0.4, 1.7, 4), std::invalid_argument);
    const VerblunskySequence ok(std::vector<Complex>{{0.3, 0}});
    CHECK_THROWS_AS(lower_bound_check(ok, 0.0, pi, 4), std::invalid_argument);
  }
}

TEST_CASE("one-step antipodal entropy equals A0 - Re(A2)/2") {
  std::mt19937_64 rng(131);
  const auto seq = random_seq(rng, 5, 0.8);
  const std::size_t n = 5;
  const BernsteinSzegoWeight w(seq, n);
  const BernsteinSzegoWeight w1 = BernsteinSzegoWeight::shifted(seq, n, 1);
  const SingularityProfile profile({{0.0, 1}, {pi, 1}});
  auto quad = periodic_mean(
      [&](double t) { return Complex{profile.weight(t) * std::log(w.eval(t) / w1.eval(t)), 0}; },
      1e-12);
  const TaylorA A = taylor_A(seq);
  CHECK(std::abs(quad.real() - (A.a0 - 0.5 * A.a2.real())) < 1e-9);
}
