#include "opuc/polynomials.hpp"

namespace opuc {

Complex horner(const std::vector<Complex>& coeffs, Complex z) {
  Complex acc{};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

MonicPolynomialPair szego_recursion(const VerblunskySequence& seq, std::size_t n) {
  std::vector<Complex> phi{Complex{1.0, 0.0}};
  std::vector<Complex> phi_star{Complex{1.0, 0.0}};
  for (std::size_t k = 0; k < n; ++k) {
    const Complex a = seq.at(static_cast<std::int64_t>(k));
    std::vector<Complex> next_phi(k + 2), next_star(k + 2);
    // z * phi
    for (std::size_t j = 0; j <= k; ++j) next_phi[j + 1] = phi[j];
    for (std::size_t j = 0; j <= k; ++j) next_phi[j] -= std::conj(a) * phi_star[j];
    // phi_star - a z phi
    for (std::size_t j = 0; j <= k; ++j) next_star[j] = phi_star[j];
    for (std::size_t j = 0; j <= k; ++j) next_star[j + 1] -= a * phi[j];
    phi = std::move(next_phi);
    phi_star = std::move(next_star);
  }
  return {std::move(phi), std::move(phi_star)};
}

}  // namespace opuc
