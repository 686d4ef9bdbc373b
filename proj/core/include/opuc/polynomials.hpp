#ifndef OPUC_POLYNOMIALS_HPP
#define OPUC_POLYNOMIALS_HPP

#include <vector>

#include "opuc/sequences.hpp"

namespace opuc {

// Horner evaluation; coefficients in ascending degree order.
Complex horner(const std::vector<Complex>& coeffs, Complex z);

// Monic orthogonal polynomial Phi_n and its reversed conjugate Phi_n*.
// Invariant: Phi_n*(z) = z^n conj(Phi_n(1/conj(z))), i.e. coefficient
// reversal plus conjugation; Phi_n*(0) = 1 and all zeros of Phi_n lie in D.
struct MonicPolynomialPair {
  std::vector<Complex> phi;       // degree n, leading coefficient 1
  std::vector<Complex> phi_star;  // constant coefficient 1

  std::size_t order() const { return phi.size() - 1; }
  Complex eval_phi(Complex z) const { return horner(phi, z); }
  Complex eval_phi_star(Complex z) const { return horner(phi_star, z); }
};

// Phi_0 = Phi_0* = 1;
// Phi_{k+1}(z)  = z Phi_k(z) - conj(alpha_k) Phi_k*(z)
// Phi_{k+1}*(z) = Phi_k*(z) - alpha_k z Phi_k(z)
MonicPolynomialPair szego_recursion(const VerblunskySequence& seq, std::size_t n);

}  // namespace opuc

#endif
