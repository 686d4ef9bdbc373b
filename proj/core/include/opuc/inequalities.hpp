#ifndef OPUC_INEQUALITIES_HPP
#define OPUC_INEQUALITIES_HPP

#include <string>
#include <vector>

#include "opuc/sequences.hpp"

namespace opuc {

struct InequalityReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;  // lhs <= rhs + 1e-13 roundoff allowance
  double slack = 0.0;  // rhs - lhs

  static InequalityReport make(std::string name, double lhs, double rhs);
};

// Forward difference (del f)_j = f_{j+1} - f_j with zero-extension on the
// right; entries for j = 0 .. f.size()-1 (the last uses the implicit zero).
ComplexSequence forward_difference(const ComplexSequence& f);

// Second difference (del^2 f)_j = f_{j+2} - 2 f_{j+1} + f_j.
ComplexSequence second_difference(const ComplexSequence& f);

// Discrete Leibniz rule del(fg) = (delta f)(del g) + (del f) g; returns the
// max componentwise residual (identically zero in exact arithmetic).
double leibniz_check(const ComplexSequence& f, const ComplexSequence& g);

// Discrete Kato inequality |del |f|| <= |del f|, componentwise.
std::vector<InequalityReport> kato_check(const ComplexSequence& f);

// sum |(del a)_n|^3 <= 2^{3/2} (sum |a_n|^6)^{1/4} (sum |(del^2 a)_n|^2)^{3/4}.
InequalityReport gn_inequality(const ComplexSequence& seq);

// Bounds attached to the antipodal term families:
//   |F_j| <= 13/8, |G_j| <= 1/4;
//   |a_j| < 1/2  =>  |a_j|^6 / 6 <= -B_j <= 2 |a_j|^6 / 9;
//   |a_{j+1}|^4 + |a_j|^4 <= -8 D_j <= 4 (|a_{j+1}|^4 + |a_j|^4).
std::vector<InequalityReport> lemma33_bounds(const VerblunskySequence& seq);

// Bounds attached to the order-2 term families:
//   |Kt_j| <= 47/8, |Lt_j| <= 1/4; Jt_j <= 0;
//   |a_j| < 1/2  =>  |a_j|^6 / 2 <= -Ht_j <= 2 |a_j|^6 / 3   (Ht = 3B);
//   sum |a_j|^2 |a_{j+2} - a_j|^2 <= 4 ||a||_6^2 ||del a||_3^2.
std::vector<InequalityReport> lemma43_bounds(const VerblunskySequence& seq);

// For eps = min(2|a|, 2-2|a|)/3 and gamma = b2 - 2a b1 + b0:
//   |b1|^2 |gamma|^2 + |b2^2 - b1^2|^2 / 2 + |b1^2 - b0^2|^2 / 2 >= eps^4 |b1|^4 / 2.
// Rejects a = 0.
InequalityReport epsilon_lemma(Complex b0, Complex b1, Complex b2, double a);

// Summation-by-parts over the two-sided zero extension:
// sum (del f)_n conj(g_n) = -sum (delta f)_n conj((del g)_n), sums over n >= -1.
double adjoint_identity_residual(const ComplexSequence& f, const ComplexSequence& g);

}  // namespace opuc

#endif
