#ifndef OPUC_SUM_RULES_HPP
#define OPUC_SUM_RULES_HPP

#include <map>
#include <string>

#include "opuc/quadrature.hpp"
#include "opuc/sequences.hpp"

namespace opuc {

// Term families of the antipodal (two singularities at 0 and pi) decomposition:
//   B_j = 1/2 [log(1-|a_j|^2) + |a_j|^2 + |a_j|^4/2]
//   C_j = -1/4 (1-|a_{j+1}|^2) |a_j - a_{j+2}|^2
//   D_j = -1/8 (|a_{j+1}^2 + a_j^2|^2 + 4 |a_j a_{j+1}|^2)
//   F_j = -1/2 Re(a_j^2/2 + a_{j+1} - a_{j+1}|a_j|^2) + |a_{j+1}|^2|a_j|^2/4 - |a_j|^4/8
//   G_j = -1/4 |a_j|^2
// B, C, D are nonpositive.
struct AntipodalTerms {
  double b = 0.0, c = 0.0, d = 0.0, f = 0.0, g = 0.0;
};

// Term families of the order-2 (double singularity at 0) decomposition and
// their tilde variants. I and the tilde J are nonpositive.
struct Order2Terms {
  double h = 0.0, i = 0.0, j = 0.0, k = 0.0, l = 0.0;
  double ht = 0.0, it = 0.0, jt = 0.0, kt = 0.0, lt = 0.0;
};

// The five sum components of the general two-point decomposition in the
// gauge-rotated variables beta_j = alpha_j e^{i(theta1+theta2)j/2}.
struct TwoPointData {
  double a = 0.0;  // cos((theta1-theta2)/2)
  ComplexSequence beta;
  ComplexSequence gamma;  // gamma_j = beta_{j+2} - 2a beta_{j+1} + beta_j
  double sum_entropy = 0.0;     // (1/2+a^2) sum [log(1-|b|^2) + |b|^2 + |b|^4/2]
  double sum_gamma = 0.0;       // -1/4 sum (1-|b_{j+1}|^2) |gamma_j|^2
  double sum_forward = 0.0;     // -1/4 sum |b_{j+1}|^2 |b_{j+2} - 2a b_{j+1}|^2
  double sum_backward = 0.0;    // -1/4 sum |b_{j+1}|^2 |b_j - 2a b_{j+1}|^2
  double sum_square_diff = 0.0; // -1/8 sum |b_{j+1}^2 - b_j^2|^2 + a^2/2 sum |b_j|^4

  double total() const {
    return sum_entropy + sum_gamma + sum_forward + sum_backward + sum_square_diff;
  }
};

// One side-by-side record: quadrature value of a weighted entropy integral of
// log(w/w_m) against the algebraic term sums, with residual = lhs - sum(rhs).
struct SumRuleLedger {
  IntegralResult lhs;
  std::map<std::string, double> rhs_terms;
  double residual = 0.0;

  double rhs_total() const {
    double s = 0.0;
    for (const auto& [name, v] : rhs_terms) s += v;
    return s;
  }
};

AntipodalTerms antipodal_terms(const VerblunskySequence& seq, std::int64_t j);

// |A0 - Re(A2)/2 - (B0 + C0 + D0 + F0 - F1 + G0 - G2)|; machine-precision small.
double antipodal_identity(const VerblunskySequence& seq);

// Iterated antipodal sum rule: the (1-cos^2 theta)-weighted entropy of
// log(w/w_m) against F_0 - F_m + G_0 + G_1 - G_m - G_{m+1} + sum_{j<m}(B+C+D).
SumRuleLedger antipodal_iterated(const VerblunskySequence& seq, std::size_t m, double atol);

Order2Terms order2_terms(const VerblunskySequence& seq, std::int64_t j);

// Residuals of both order-2 decompositions against 3A0 - 2Re A1 + Re(A2)/2.
struct Order2Residuals {
  double plain = 0.0;
  double tilde = 0.0;
};
Order2Residuals order2_identity(const VerblunskySequence& seq);

// Iterated order-2 sum rule: the (1-cos theta)^2-weighted entropy of
// log(w/w_m) against Kt_0 - Kt_m + Lt_0 + Lt_1 - Lt_m - Lt_{m+1} + sum_{j<m}(Ht+It+Jt).
SumRuleLedger order2_iterated(const VerblunskySequence& seq, std::size_t m, double atol);

// Closed form for the one-step two-point integral:
//   (2 + cos(theta1-theta2)) A0 - Re[(e^{i theta1}+e^{i theta2}) A1]
//   + Re[e^{i(theta1+theta2)} A2] / 2
double twopoint_I1(const VerblunskySequence& seq, double theta1, double theta2);

TwoPointData twopoint_terms(const VerblunskySequence& seq, double theta1, double theta2,
                            std::size_t m);

// Two-point ledger: residual C = I_m (quadrature) - total of the five sums.
// C depends only on coefficients near the index boundaries.
SumRuleLedger twopoint_ledger(const VerblunskySequence& seq, double theta1, double theta2,
                              std::size_t m, double atol);

// Partial sums of sum_j |(prod_k (delta - e^{-i theta_k})^{m_k} alpha)_j|^2
// + |alpha_j|^{2 max(m_k) + 2} (the general coefficient-side functional).
std::vector<double> rhs_general(const VerblunskySequence& seq, const SingularityProfile& profile);

struct LowerBoundReport {
  bool holds = false;
  double slack = 0.0;  // rhs - lhs
  double lhs = 0.0;    // I_m
  double rhs = 0.0;
};

// Upper bound on I_m with the explicit sixth-order absorption:
//   I_m <= C + eps^4/32 sum |a_j|^4 - 1/8 sum |gamma_j|^2 - eps^4/16 sum |a_j|^4
// with eps = min(2|a|, 2-2|a|)/3 and C the two-point ledger residual.
// Requires sup|alpha_j| <= 1/2 and non-antipodal angles.
LowerBoundReport lower_bound_check(const VerblunskySequence& seq, double theta1, double theta2,
                                   std::size_t m, double atol = 1e-11);

}  // namespace opuc

#endif
