#include "opuc/weights.hpp"

#include <cmath>

namespace opuc {

BernsteinSzegoWeight::BernsteinSzegoWeight(const VerblunskySequence& seq, std::size_t n)
    : n_(n), prefix_([&] {
        std::vector<Complex> vals(n);
        for (std::size_t j = 0; j < n; ++j) vals[j] = seq.at(static_cast<std::int64_t>(j));
        return VerblunskySequence(std::move(vals));
      }()),
      rho_product_(1.0), pair_(szego_recursion(prefix_, n)) {
  for (std::size_t j = 0; j < n; ++j) {
    const double r = prefix_.rho(static_cast<std::int64_t>(j));
    rho_product_ *= r * r;
  }
}

double BernsteinSzegoWeight::eval(double theta) const {
  // Pointwise recursion rather than Horner on the stored coefficients: for
  // large n the coefficients span many orders of magnitude and Horner loses
  // all precision where |Phi*| is small, while the recursion stays stable.
  const Complex z = std::polar(1.0, theta);
  Complex phi{1.0, 0.0};
  Complex phi_star{1.0, 0.0};
  for (std::size_t k = 0; k < n_; ++k) {
    const Complex a = prefix_.at(static_cast<std::int64_t>(k));
    const Complex next = z * phi - std::conj(a) * phi_star;
    phi_star -= a * z * phi;
    phi = next;
  }
  return rho_product_ / std::norm(phi_star);
}

BernsteinSzegoWeight BernsteinSzegoWeight::shifted(const VerblunskySequence& seq, std::size_t n,
                                                   std::size_t m) {
  std::vector<Complex> vals;
  if (n > m) {
    vals.resize(n - m);
    for (std::size_t j = 0; j < n - m; ++j) vals[j] = seq.at(static_cast<std::int64_t>(j + m));
  }
  VerblunskySequence tail(std::move(vals));
  return BernsteinSzegoWeight(tail, tail.size());
}

}  // namespace opuc
