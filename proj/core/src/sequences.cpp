#include "opuc/sequences.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace opuc {

namespace {

void check_guard(const std::vector<Complex>& values) {
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (std::abs(values[j]) > kDiskGuard) {
      throw std::invalid_argument("Verblunsky coefficient at index " + std::to_string(j) +
                                  " has modulus " + std::to_string(std::abs(values[j])) +
                                  " outside the disk guard");
    }
  }
}

}  // namespace

VerblunskySequence::VerblunskySequence(std::vector<Complex> values) {
  check_guard(values);
  seq_ = ComplexSequence(std::move(values));
}

VerblunskySequence::VerblunskySequence(ComplexSequence seq) {
  check_guard(seq.values());
  seq_ = std::move(seq);
}

double VerblunskySequence::rho(std::int64_t j) const {
  const double m = std::abs(seq_.at(j));
  return std::sqrt(1.0 - m * m);
}

SingularityProfile::SingularityProfile(std::vector<SingularityPoint> points)
    : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("singularity profile needs at least one point");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t k = 0; k < points_.size(); ++k) {
    if (points_[k].multiplicity < 1)
      throw std::invalid_argument("singularity multiplicity must be >= 1");
    for (std::size_t l = 0; l < k; ++l) {
      double d = std::remainder(points_[k].theta - points_[l].theta, two_pi);
      if (std::abs(d) < 1e-14)
        throw std::invalid_argument("singularity points must be distinct mod 2pi");
    }
  }
}

int SingularityProfile::max_multiplicity() const {
  int m = 0;
  for (const auto& pt : points_) m = std::max(m, pt.multiplicity);
  return m;
}

int SingularityProfile::total_multiplicity() const {
  int m = 0;
  for (const auto& pt : points_) m += pt.multiplicity;
  return m;
}

double SingularityProfile::weight(double theta) const {
  double w = 1.0;
  for (const auto& pt : points_) {
    const double base = 1.0 - std::cos(theta - pt.theta);
    for (int k = 0; k < pt.multiplicity; ++k) w *= base;
  }
  return w;
}

VerblunskySequence generate(const FamilySpec& spec) {
  std::vector<Complex> out;
  out.reserve(spec.length);
  switch (spec.kind) {
    case FamilySpec::Kind::Zero:
      out.assign(spec.length, Complex{});
      break;
    case FamilySpec::Kind::Geometric: {
      double scale = spec.c;
      for (std::size_t j = 0; j < spec.length; ++j) {
        out.push_back(Complex{scale, 0.0});
        scale *= spec.lambda;
      }
      break;
    }
    case FamilySpec::Kind::Power:
      for (std::size_t j = 0; j < spec.length; ++j) {
        const double mag = spec.c * std::pow(static_cast<double>(j + 1), -spec.p);
        out.push_back(std::polar(mag, spec.omega * static_cast<double>(j)));
      }
      break;
    case FamilySpec::Kind::Modal:
      for (std::size_t j = 0; j < spec.length; ++j) {
        Complex sum{};
        for (const auto& [ck, thetak] : spec.modes)
          sum += ck * std::polar(1.0, -static_cast<double>(j) * thetak);
        out.push_back(std::pow(static_cast<double>(j + 1), -spec.p) * sum);
      }
      break;
    case FamilySpec::Kind::Random: {
      std::mt19937_64 rng(spec.seed);
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      constexpr double two_pi = 2.0 * std::numbers::pi;
      for (std::size_t j = 0; j < spec.length; ++j) {
        const double r = spec.radius * std::sqrt(unit(rng));
        const double phi = two_pi * unit(rng);
        out.push_back(std::polar(r, phi));
      }
      break;
    }
  }
  return VerblunskySequence(std::move(out));
}

ComplexSequence shift(const ComplexSequence& seq) {
  if (seq.empty()) return {};
  std::vector<Complex> out(seq.values().begin() + 1, seq.values().end());
  return ComplexSequence(std::move(out));
}

ComplexSequence shift(const VerblunskySequence& seq) { return shift(seq.sequence()); }

ComplexSequence factored_difference(const ComplexSequence& seq, const SingularityProfile& profile) {
  std::vector<Complex> cur = seq.values();
  for (const auto& pt : profile.points()) {
    const Complex root = std::polar(1.0, -pt.theta);
    for (int k = 0; k < pt.multiplicity; ++k) {
      if (cur.empty()) return {};
      std::vector<Complex> next(cur.size() - 1 > 0 ? cur.size() - 1 : 0);
      for (std::size_t j = 0; j + 1 < cur.size(); ++j) next[j] = cur[j + 1] - root * cur[j];
      cur = std::move(next);
    }
  }
  return ComplexSequence(std::move(cur));
}

ComplexSequence gauge_rotate(const VerblunskySequence& seq, double theta1, double theta2) {
  std::vector<Complex> out(seq.size());
  const double half = 0.5 * (theta1 + theta2);
  for (std::size_t j = 0; j < seq.size(); ++j)
    out[j] = seq.at(static_cast<std::int64_t>(j)) * std::polar(1.0, half * static_cast<double>(j));
  return ComplexSequence(std::move(out));
}

std::vector<double> lp_partial_sums(const ComplexSequence& seq, double p) {
  if (p <= 0.0) throw std::invalid_argument("lp_partial_sums requires p > 0");
  std::vector<double> out(seq.size());
  double acc = 0.0;
  for (std::size_t j = 0; j < seq.size(); ++j) {
    acc += std::pow(std::abs(seq.values()[j]), p);
    out[j] = acc;
  }
  return out;
}

}  // namespace opuc
