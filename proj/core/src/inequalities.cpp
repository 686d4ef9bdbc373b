#include "opuc/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "opuc/sum_rules.hpp"

namespace opuc {

namespace {

double lp_norm(const ComplexSequence& seq, double p) {
  double acc = 0.0;
  for (const auto& v : seq.values()) acc += std::pow(std::abs(v), p);
  return std::pow(acc, 1.0 / p);
}

}  // namespace

InequalityReport InequalityReport::make(std::string name, double lhs, double rhs) {
  InequalityReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.holds = lhs <= rhs + 1e-13;
  return r;
}

ComplexSequence forward_difference(const ComplexSequence& f) {
  std::vector<Complex> out(f.size());
  for (std::size_t j = 0; j < f.size(); ++j)
    out[j] = f.at(static_cast<std::int64_t>(j) + 1) - f.at(static_cast<std::int64_t>(j));
  return ComplexSequence(std::move(out));
}

ComplexSequence second_difference(const ComplexSequence& f) {
  std::vector<Complex> out(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) {
    const auto i = static_cast<std::int64_t>(j);
    out[j] = f.at(i + 2) - 2.0 * f.at(i + 1) + f.at(i);
  }
  return ComplexSequence(std::move(out));
}

double leibniz_check(const ComplexSequence& f, const ComplexSequence& g) {
  const std::size_t n = std::max(f.size(), g.size());
  double max_res = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const auto i = static_cast<std::int64_t>(j);
    const Complex del_fg = f.at(i + 1) * g.at(i + 1) - f.at(i) * g.at(i);
    const Complex rhs = f.at(i + 1) * (g.at(i + 1) - g.at(i)) + (f.at(i + 1) - f.at(i)) * g.at(i);
    max_res = std::max(max_res, std::abs(del_fg - rhs));
  }
  return max_res;
}

std::vector<InequalityReport> kato_check(const ComplexSequence& f) {
  std::vector<InequalityReport> out;
  out.reserve(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) {
    const auto i = static_cast<std::int64_t>(j);
    const double lhs = std::abs(std::abs(f.at(i + 1)) - std::abs(f.at(i)));
    const double rhs = std::abs(f.at(i + 1) - f.at(i));
    out.push_back(InequalityReport::make("kato[" + std::to_string(j) + "]", lhs, rhs));
  }
  return out;
}

InequalityReport gn_inequality(const ComplexSequence& seq) {
  const ComplexSequence d1 = forward_difference(seq);
  const ComplexSequence d2 = second_difference(seq);
  double lhs = 0.0;
  for (const auto& v : d1.values()) lhs += std::pow(std::abs(v), 3.0);
  const double rhs = std::pow(2.0, 1.5) * std::pow(std::pow(lp_norm(seq, 6.0), 6.0), 0.25) *
                     std::pow(std::pow(lp_norm(d2, 2.0), 2.0), 0.75);
  return InequalityReport::make("gagliardo_nirenberg", lhs, rhs);
}

std::vector<InequalityReport> lemma33_bounds(const VerblunskySequence& seq) {
  std::vector<InequalityReport> out;
  for (std::size_t j = 0; j < seq.size(); ++j) {
    const auto i = static_cast<std::int64_t>(j);
    const AntipodalTerms t = antipodal_terms(seq, i);
    const std::string idx = "[" + std::to_string(j) + "]";
    out.push_back(InequalityReport::make("abs_F" + idx, std::abs(t.f), 13.0 / 8.0));
    out.push_back(InequalityReport::make("abs_G" + idx, std::abs(t.g), 0.25));
    const double a4 = std::pow(std::abs(seq.at(i)), 4.0) + std::pow(std::abs(seq.at(i + 1)), 4.0);
    out.push_back(InequalityReport::make("D_lower" + idx, a4, -8.0 * t.d));
    out.push_back(InequalityReport::make("D_upper" + idx, -8.0 * t.d, 4.0 * a4));
    if (std::abs(seq.at(i)) < 0.5) {
      const double a6 = std::pow(std::abs(seq.at(i)), 6.0);
      out.push_back(InequalityReport::make("B_lower" + idx, a6 / 6.0, -t.b));
      out.push_back(InequalityReport::make("B_upper" + idx, -t.b, 2.0 * a6 / 9.0));
    }
  }
  return out;
}

std::vector<InequalityReport> lemma43_bounds(const VerblunskySequence& seq) {
  std::vector<InequalityReport> out;
  double weighted_sum = 0.0;
  for (std::size_t j = 0; j < seq.size(); ++j) {
    const auto i = static_cast<std::int64_t>(j);
    const Order2Terms t = order2_terms(seq, i);
    const std::string idx = "[" + std::to_string(j) + "]";
    out.push_back(InequalityReport::make("abs_Kt" + idx, std::abs(t.kt), 47.0 / 8.0));
    out.push_back(InequalityReport::make("abs_Lt" + idx, std::abs(t.lt), 0.25));
    out.push_back(InequalityReport::make("Jt_nonpositive" + idx, t.jt, 0.0));
    if (std::abs(seq.at(i)) < 0.5) {
      const double a6 = std::pow(std::abs(seq.at(i)), 6.0);
      out.push_back(InequalityReport::make("Ht_lower" + idx, a6 / 2.0, -t.ht));
      out.push_back(InequalityReport::make("Ht_upper" + idx, -t.ht, 2.0 * a6 / 3.0));
    }
    weighted_sum += std::norm(seq.at(i)) * std::norm(seq.at(i + 2) - seq.at(i));
  }
  const ComplexSequence d1 = forward_difference(seq.sequence());
  const double rhs = 4.0 * std::pow(lp_norm(seq.sequence(), 6.0), 2.0) *
                     std::pow(lp_norm(d1, 3.0), 2.0);
  out.push_back(InequalityReport::make("holder_term_bound", weighted_sum, rhs));
  return out;
}

InequalityReport epsilon_lemma(Complex b0, Complex b1, Complex b2, double a) {
  if (a == 0.0) throw std::invalid_argument("epsilon_lemma requires a != 0");
  const double eps = std::min(2.0 * std::abs(a), 2.0 - 2.0 * std::abs(a)) / 3.0;
  const Complex gamma = b2 - 2.0 * a * b1 + b0;
  const double lhs = std::norm(b1) * std::norm(gamma) + 0.5 * std::norm(b2 * b2 - b1 * b1) +
                     0.5 * std::norm(b1 * b1 - b0 * b0);
  const double rhs = 0.5 * std::pow(eps, 4.0) * std::norm(b1) * std::norm(b1);
  // The inequality direction is rhs <= lhs.
  return InequalityReport::make("epsilon_lemma", rhs, lhs);
}

double adjoint_identity_residual(const ComplexSequence& f, const ComplexSequence& g) {
  const auto n = static_cast<std::int64_t>(std::max(f.size(), g.size()));
  Complex lhs{}, rhs{};
  for (std::int64_t j = -1; j <= n; ++j) {
    lhs += (f.at(j + 1) - f.at(j)) * std::conj(g.at(j));
    rhs -= f.at(j + 1) * std::conj(g.at(j + 1) - g.at(j));
  }
  return std::abs(lhs - rhs);
}

}  // namespace opuc
