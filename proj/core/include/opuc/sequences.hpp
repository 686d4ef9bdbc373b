#ifndef OPUC_SEQUENCES_HPP
#define OPUC_SEQUENCES_HPP

#include <complex>
#include <cstdint>
#include <vector>

namespace opuc {

using Complex = std::complex<double>;

// Numerical guard keeping coefficients strictly inside the unit disk.
inline constexpr double kDiskGuard = 1.0 - 1e-12;

// Finite complex sequence, implicitly zero beyond its stored length.
class ComplexSequence {
public:
  ComplexSequence() = default;
  explicit ComplexSequence(std::vector<Complex> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  // Zero-extended read: indices past the end (or negative) return 0.
  Complex at(std::int64_t j) const {
    if (j < 0 || static_cast<std::size_t>(j) >= values_.size()) return {};
    return values_[static_cast<std::size_t>(j)];
  }

  const std::vector<Complex>& values() const { return values_; }

private:
  std::vector<Complex> values_;
};

// Coefficient sequence with every entry strictly inside the unit disk.
// Construction throws std::invalid_argument naming the first offending index.
class VerblunskySequence {
public:
  VerblunskySequence() = default;
  explicit VerblunskySequence(std::vector<Complex> values);
  explicit VerblunskySequence(ComplexSequence seq);

  std::size_t size() const { return seq_.size(); }
  Complex at(std::int64_t j) const { return seq_.at(j); }

  // rho_j = sqrt(1 - |alpha_j|^2); equals 1 past the end.
  double rho(std::int64_t j) const;

  const ComplexSequence& sequence() const { return seq_; }
  const std::vector<Complex>& values() const { return seq_.values(); }

private:
  ComplexSequence seq_;
};

// Points theta_k (radians, distinct mod 2pi) with positive multiplicities m_k.
struct SingularityPoint {
  double theta = 0.0;
  int multiplicity = 1;
};

class SingularityProfile {
public:
  explicit SingularityProfile(std::vector<SingularityPoint> points);

  const std::vector<SingularityPoint>& points() const { return points_; }
  int max_multiplicity() const;
  int total_multiplicity() const;

  // prod_k (1 - cos(theta - theta_k))^{m_k}
  double weight(double theta) const;

private:
  std::vector<SingularityPoint> points_;
};

// Deterministic test-family generator.
struct FamilySpec {
  enum class Kind { Zero, Geometric, Power, Modal, Random };

  Kind kind = Kind::Zero;
  std::size_t length = 0;

  // geometric: alpha_j = c * lambda^j
  // power:     alpha_j = c * (j+1)^{-p} * exp(i omega j)
  double c = 0.0;
  double lambda = 0.0;
  double p = 0.0;
  double omega = 0.0;

  // modal: alpha_j = (j+1)^{-p} * sum_k c_k exp(-i j theta_k); the minus sign
  // places the induced weight feature at +theta_k, matching the singularity
  // profile convention (delta - e^{-i theta_k}).
  std::vector<std::pair<double, double>> modes;  // (c_k, theta_k)

  // random: entries uniform in the disk of the given radius
  std::uint64_t seed = 0;
  double radius = 0.0;
};

VerblunskySequence generate(const FamilySpec& spec);

// (delta seq)_j = seq_{j+1}; length decreases by one.
ComplexSequence shift(const ComplexSequence& seq);
ComplexSequence shift(const VerblunskySequence& seq);

// Applies prod_k (delta - e^{-i theta_k})^{m_k}; output length N - sum(m_k), clamped at 0.
ComplexSequence factored_difference(const ComplexSequence& seq, const SingularityProfile& profile);

// beta_j = alpha_j * exp(i (theta1+theta2) j / 2); preserves moduli.
ComplexSequence gauge_rotate(const VerblunskySequence& seq, double theta1, double theta2);

// Partial sums of |seq_j|^p, j < n, for n = 1..N.
std::vector<double> lp_partial_sums(const ComplexSequence& seq, double p);

}  // namespace opuc

#endif
