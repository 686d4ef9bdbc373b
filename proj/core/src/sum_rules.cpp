#include "opuc/sum_rules.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "opuc/relative_szego.hpp"
#include "opuc/weights.hpp"

namespace opuc {

namespace {

double sq(double x) { return x * x; }

// Helper shared by the iterated ledgers: weighted entropy of log(w/w_m).
IntegralResult weighted_log_ratio(const VerblunskySequence& seq, std::size_t m,
                                  const SingularityProfile& profile, double atol) {
  const std::size_t n = std::max(seq.size(), m);
  const BernsteinSzegoWeight w(seq, n);
  const BernsteinSzegoWeight wm = BernsteinSzegoWeight::shifted(seq, n, m);
  auto integrand = [&](double theta) -> Complex {
    return Complex{profile.weight(theta) * std::log(w.eval(theta) / wm.eval(theta)), 0.0};
  };
  return periodic_mean(integrand, atol);
}

}  // namespace

AntipodalTerms antipodal_terms(const VerblunskySequence& seq, std::int64_t j) {
  const Complex a0 = seq.at(j), a1 = seq.at(j + 1), a2 = seq.at(j + 2);
  const double n0 = std::norm(a0), n1 = std::norm(a1);
  AntipodalTerms t;
  t.b = 0.5 * (std::log(1.0 - n0) + n0 + 0.5 * n0 * n0);
  t.c = -0.25 * (1.0 - n1) * std::norm(a0 - a2);
  t.d = -0.125 * (std::norm(a1 * a1 + a0 * a0) + 4.0 * std::norm(a0 * a1));
  t.f = -0.5 * (0.5 * a0 * a0 + a1 - a1 * n0).real() + 0.25 * n1 * n0 - 0.125 * n0 * n0;
  t.g = -0.25 * n0;
  return t;
}

double antipodal_identity(const VerblunskySequence& seq) {
  const TaylorA A = taylor_A(seq);
  const double lhs = A.a0 - 0.5 * A.a2.real();
  const AntipodalTerms t0 = antipodal_terms(seq, 0);
  const AntipodalTerms t1 = antipodal_terms(seq, 1);
  const AntipodalTerms t2 = antipodal_terms(seq, 2);
  const double rhs = t0.b + t0.c + t0.d + t0.f - t1.f + t0.g - t2.g;
  return std::abs(lhs - rhs);
}

SumRuleLedger antipodal_iterated(const VerblunskySequence& seq, std::size_t m, double atol) {
  if (m < 2 || m % 2 != 0) throw std::invalid_argument("antipodal_iterated requires even m >= 2");
  const SingularityProfile profile({{0.0, 1}, {std::numbers::pi, 1}});

  SumRuleLedger ledger;
  ledger.lhs = weighted_log_ratio(seq, m, profile, atol);

  double sum_bcd = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const AntipodalTerms t = antipodal_terms(seq, static_cast<std::int64_t>(j));
    sum_bcd += t.b + t.c + t.d;
  }
  const AntipodalTerms t0 = antipodal_terms(seq, 0);
  const AntipodalTerms t1 = antipodal_terms(seq, 1);
  const AntipodalTerms tm = antipodal_terms(seq, static_cast<std::int64_t>(m));
  const AntipodalTerms tm1 = antipodal_terms(seq, static_cast<std::int64_t>(m) + 1);

  ledger.rhs_terms["sum_BCD"] = sum_bcd;
  ledger.rhs_terms["F_boundary"] = t0.f - tm.f;
  ledger.rhs_terms["G_boundary"] = t0.g + t1.g - tm.g - tm1.g;
  ledger.residual = ledger.lhs.real() - ledger.rhs_total();
  return ledger;
}

Order2Terms order2_terms(const VerblunskySequence& seq, std::int64_t j) {
  const Complex a0 = seq.at(j), a1 = seq.at(j + 1), a2 = seq.at(j + 2);
  const double n0 = std::norm(a0), n1 = std::norm(a1);
  Order2Terms t;
  t.h = 1.5 * (std::log(1.0 - n0) + n0);
  t.i = -0.25 * std::norm(a2 - 2.0 * a1 + a0);
  t.j = 0.5 * (a0 * std::conj(a2)).real() * n1 + 0.25 * (a0 * a0 * std::conj(a1) * std::conj(a1)).real();
  t.k = -2.0 * a0.real() + 0.25 * (a0 * a0).real() + 0.5 * a1.real() -
        0.5 * (a1 * n0).real() + (std::conj(a1) * a0).real() - n0;
  t.l = -0.25 * n0;

  t.ht = t.h + 0.75 * n0 * n0;
  t.it = t.i;
  t.jt = -0.25 * n1 * std::norm(a0 - a2) - 0.125 * std::norm(a1 * a1 - a0 * a0) -
         0.25 * sq(n1 - n0);
  t.kt = t.k - 0.375 * n0 * n0 - 0.25 * n1 * n0;
  t.lt = t.l;
  return t;
}

Order2Residuals order2_identity(const VerblunskySequence& seq) {
  const TaylorA A = taylor_A(seq);
  const double lhs = 3.0 * A.a0 - 2.0 * A.a1.real() + 0.5 * A.a2.real();
  const Order2Terms t0 = order2_terms(seq, 0);
  const Order2Terms t1 = order2_terms(seq, 1);
  const Order2Terms t2 = order2_terms(seq, 2);
  const double plain = t0.h + t0.i + t0.j + t0.k - t1.k + t0.l - t2.l;
  const double tilde = t0.ht + t0.it + t0.jt + t0.kt - t1.kt + t0.lt - t2.lt;
  return {std::abs(lhs - plain), std::abs(lhs - tilde)};
}

SumRuleLedger order2_iterated(const VerblunskySequence& seq, std::size_t m, double atol) {
  if (m < 2) throw std::invalid_argument("order2_iterated requires m >= 2");
  const SingularityProfile profile({{0.0, 2}});

  SumRuleLedger ledger;
  ledger.lhs = weighted_log_ratio(seq, m, profile, atol);

  double sum_hij = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const Order2Terms t = order2_terms(seq, static_cast<std::int64_t>(j));
    sum_hij += t.ht + t.it + t.jt;
  }
  const Order2Terms t0 = order2_terms(seq, 0);
  const Order2Terms t1 = order2_terms(seq, 1);
  const Order2Terms tm = order2_terms(seq, static_cast<std::int64_t>(m));
  const Order2Terms tm1 = order2_terms(seq, static_cast<std::int64_t>(m) + 1);

  ledger.rhs_terms["sum_HIJ_tilde"] = sum_hij;
  ledger.rhs_terms["K_tilde_boundary"] = t0.kt - tm.kt;
  ledger.rhs_terms["L_tilde_boundary"] = t0.lt + t1.lt - tm.lt - tm1.lt;
  ledger.residual = ledger.lhs.real() - ledger.rhs_total();
  return ledger;
}

double twopoint_I1(const VerblunskySequence& seq, double theta1, double theta2) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (std::abs(std::remainder(theta1 - theta2, two_pi)) < 1e-14)
    throw std::invalid_argument("twopoint_I1 requires theta1 != theta2 mod 2pi");
  const TaylorA A = taylor_A(seq);
  const Complex e1 = std::polar(1.0, theta1), e2 = std::polar(1.0, theta2);
  return (2.0 + std::cos(theta1 - theta2)) * A.a0 - ((e1 + e2) * A.a1).real() +
         0.5 * (e1 * e2 * A.a2).real();
}

TwoPointData twopoint_terms(const VerblunskySequence& seq, double theta1, double theta2,
                            std::size_t m) {
  TwoPointData d;
  d.a = std::cos(0.5 * (theta1 - theta2));

  std::vector<Complex> beta(m + 2);
  const double half = 0.5 * (theta1 + theta2);
  for (std::size_t j = 0; j < m + 2; ++j)
    beta[j] = seq.at(static_cast<std::int64_t>(j)) * std::polar(1.0, half * static_cast<double>(j));

  std::vector<Complex> gamma(m);
  for (std::size_t j = 0; j < m; ++j) gamma[j] = beta[j + 2] - 2.0 * d.a * beta[j + 1] + beta[j];

  for (std::size_t j = 0; j < m; ++j) {
    const double nb = std::norm(beta[j]);
    const double nb1 = std::norm(beta[j + 1]);
    d.sum_entropy += (0.5 + d.a * d.a) * (std::log(1.0 - nb) + nb + 0.5 * nb * nb);
    d.sum_gamma += -0.25 * (1.0 - nb1) * std::norm(gamma[j]);
    d.sum_forward += -0.25 * nb1 * std::norm(beta[j + 2] - 2.0 * d.a * beta[j + 1]);
    d.sum_backward += -0.25 * nb1 * std::norm(beta[j] - 2.0 * d.a * beta[j + 1]);
    d.sum_square_diff += -0.125 * std::norm(beta[j + 1] * beta[j + 1] - beta[j] * beta[j]) +
                         0.5 * d.a * d.a * nb * nb;
  }
  d.beta = ComplexSequence(std::move(beta));
  d.gamma = ComplexSequence(std::move(gamma));
  return d;
}

SumRuleLedger twopoint_ledger(const VerblunskySequence& seq, double theta1, double theta2,
                              std::size_t m, double atol) {
  if (m < 2) throw std::invalid_argument("twopoint_ledger requires m >= 2");
  const SingularityProfile profile({{theta1, 1}, {theta2, 1}});

  SumRuleLedger ledger;
  ledger.lhs = weighted_log_ratio(seq, m, profile, atol);

  const TwoPointData d = twopoint_terms(seq, theta1, theta2, m);
  ledger.rhs_terms["sum_entropy"] = d.sum_entropy;
  ledger.rhs_terms["sum_gamma"] = d.sum_gamma;
  ledger.rhs_terms["sum_forward"] = d.sum_forward;
  ledger.rhs_terms["sum_backward"] = d.sum_backward;
  ledger.rhs_terms["sum_square_diff"] = d.sum_square_diff;
  ledger.residual = ledger.lhs.real() - ledger.rhs_total();
  return ledger;
}

std::vector<double> rhs_general(const VerblunskySequence& seq, const SingularityProfile& profile) {
  const ComplexSequence diff = factored_difference(seq.sequence(), profile);
  const double power = 2.0 * profile.max_multiplicity() + 2.0;
  std::vector<double> out(seq.size());
  double acc = 0.0;
  for (std::size_t j = 0; j < seq.size(); ++j) {
    acc += std::norm(diff.at(static_cast<std::int64_t>(j))) +
           std::pow(std::abs(seq.at(static_cast<std::int64_t>(j))), power);
    out[j] = acc;
  }
  return out;
}

LowerBoundReport lower_bound_check(const VerblunskySequence& seq, double theta1, double theta2,
                                   std::size_t m, double atol) {
  for (std::size_t j = 0; j < seq.size(); ++j)
    if (std::abs(seq.at(static_cast<std::int64_t>(j))) > 0.5)
      throw std::invalid_argument("lower_bound_check requires sup |alpha_j| <= 1/2");
  const double a = std::cos(0.5 * (theta1 - theta2));
  if (std::abs(a) < 1e-12)
    throw std::invalid_argument("lower_bound_check requires non-antipodal angles (a != 0)");
  const double eps = std::min(2.0 * std::abs(a), 2.0 - 2.0 * std::abs(a)) / 3.0;
  const double eps4 = eps * eps * eps * eps;

  const SumRuleLedger ledger = twopoint_ledger(seq, theta1, theta2, m, atol);
  const TwoPointData d = twopoint_terms(seq, theta1, theta2, m);

  double sum_gamma_sq = 0.0, sum_alpha4 = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    sum_gamma_sq += std::norm(d.gamma.at(static_cast<std::int64_t>(j)));
    sum_alpha4 += sq(std::norm(seq.at(static_cast<std::int64_t>(j))));
  }

  LowerBoundReport report;
  report.lhs = ledger.lhs.real();
  report.rhs = ledger.residual + (eps4 / 32.0) * sum_alpha4 - 0.125 * sum_gamma_sq -
               (eps4 / 16.0) * sum_alpha4;
  report.slack = report.rhs - report.lhs;
  report.holds = report.lhs <= report.rhs + 1e-13;
  return report;
}

}  // namespace opuc
