#ifndef OPUC_SCHUR_HPP
#define OPUC_SCHUR_HPP

#include "opuc/sequences.hpp"
#include "opuc/weights.hpp"

namespace opuc {

// Finitely many Schur parameters with an implicit tail of zeros; the evaluated
// function maps the open disk into itself.
struct SchurFunctionRep {
  VerblunskySequence params;
};

// Backward continued-fraction evaluation of the Schur function:
// f_N = 0, then f_k = (alpha_k + z f_{k+1}) / (1 + z conj(alpha_k) f_{k+1}).
// Requires |z| <= 1 - 1e-9.
Complex schur_eval(const SchurFunctionRep& rep, Complex z);

// F(z) = (1 + z f(z)) / (1 - z f(z)); Re F > 0, F(0) = 1.
Complex caratheodory_eval(const SchurFunctionRep& rep, Complex z);

// F(z) = int (e^{i theta}+z)/(e^{i theta}-z) w(theta) dtheta/2pi by adaptive
// quadrature; agrees with caratheodory_eval built from the same prefix.
Complex caratheodory_from_measure(const BernsteinSzegoWeight& weight, Complex z, double atol = 1e-12);

// Inverse Schur algorithm: recovers the first `count` parameters of f by the
// mean-value trick on a circle of sample points (|z| = radius), peeling one
// level per step via f_{k+1}(z) = (f_k(z) - alpha_k) / (z (1 - conj(alpha_k) f_k(z))).
std::vector<Complex> schur_recover(const SchurFunctionRep& rep, std::size_t count,
                                   double radius = 0.4, std::size_t samples = 64);

}  // namespace opuc

#endif
