#ifndef OPUC_RELATIVE_SZEGO_HPP
#define OPUC_RELATIVE_SZEGO_HPP

#include "opuc/schur.hpp"
#include "opuc/sequences.hpp"

namespace opuc {

// First three Taylor coefficients of log(delta_0 D) at 0.
struct TaylorA {
  double a0 = 0.0;  // log rho_0, always <= 0
  Complex a1{};
  Complex a2{};
};

// (delta_0 D)(z) = (1 - conj(alpha_0) f(z))/rho_0 * (1 - z f_1(z))/(1 - z f(z)),
// with f the Schur function of the sequence and f_1 of its shift.
Complex relative_szego_eval(const VerblunskySequence& seq, Complex z);

// Closed-form coefficients:
//   A0 = log rho_0
//   A1 = alpha_0 - alpha_1 - conj(alpha_0) alpha_1
//   A2 = a0^2/2 - a1^2/2 + a1 - a2 - a1|a0|^2 + a2|a1|^2 - conj(a0) a2 rho_1^2
//        + conj(a0)^2 a1^2 / 2
TaylorA taylor_A(const VerblunskySequence& seq);

// Same coefficients by discrete Fourier analysis of log(relative_szego_eval)
// on the contour |z| = 0.25 (256 points), with branch tracking of the
// logarithm along the contour. Throws std::runtime_error if the tracked
// branch fails to close up (winding detected).
TaylorA taylor_A_numeric(const VerblunskySequence& seq);

// Builds w from the first n coefficients and w_1 from the shifted prefix,
// takes Fourier coefficients of log(w/w_1) at m = 0, +-1, +-2, and returns the
// max deviation from (2 A0, A1, A2, conj A1, conj A2).
double step_fourier_check(const VerblunskySequence& seq, std::size_t n, double atol = 1e-12);

}  // namespace opuc

#endif
