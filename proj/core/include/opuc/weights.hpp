#ifndef OPUC_WEIGHTS_HPP
#define OPUC_WEIGHTS_HPP

#include "opuc/polynomials.hpp"
#include "opuc/sequences.hpp"

namespace opuc {

// Truncated purely a.c. weight w^{(n)}(theta) = prod_{j<n} rho_j^2 / |Phi_n*(e^{i theta})|^2,
// determined by the first n coefficients of a sequence.
class BernsteinSzegoWeight {
public:
  BernsteinSzegoWeight(const VerblunskySequence& seq, std::size_t n);

  std::size_t order() const { return n_; }
  double rho_product() const { return rho_product_; }
  const MonicPolynomialPair& pair() const { return pair_; }
  const VerblunskySequence& prefix() const { return prefix_; }

  // Strictly positive for guarded coefficients.
  double eval(double theta) const;

  // Weight of the m-shifted measure: coefficients (alpha_m, alpha_{m+1}, ...).
  static BernsteinSzegoWeight shifted(const VerblunskySequence& seq, std::size_t n,
                                      std::size_t m);

private:
  std::size_t n_;
  VerblunskySequence prefix_;
  double rho_product_;
  MonicPolynomialPair pair_;
};

}  // namespace opuc

#endif
