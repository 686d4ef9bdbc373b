#include "opuc/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "opuc/inequalities.hpp"
#include "opuc/quadrature.hpp"
#include "opuc/sum_rules.hpp"
#include "opuc/weights.hpp"

namespace opuc {

namespace {

using nlohmann::json;

VerblunskySequence random_sequence(std::mt19937_64& rng, std::size_t length, double radius) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  std::vector<Complex> vals(length);
  for (auto& v : vals) {
    const double r = radius * std::sqrt(unit(rng));
    v = std::polar(r, two_pi * unit(rng));
  }
  return VerblunskySequence(std::move(vals));
}

ComplexSequence random_complex(std::mt19937_64& rng, std::size_t length, double scale) {
  std::uniform_real_distribution<double> sym(-scale, scale);
  std::vector<Complex> vals(length);
  for (auto& v : vals) v = Complex{sym(rng), sym(rng)};
  return ComplexSequence(std::move(vals));
}

void track(IdentitySummary& s, double residual) {
  s.max_residual = std::max(s.max_residual, residual);
  ++s.cases;
}

double violation(const InequalityReport& r) { return std::max(0.0, r.lhs - r.rhs); }

}  // namespace

void ExperimentConfig::validate() const {
  if (n_values.empty()) throw std::invalid_argument("config: n_values must be nonempty");
  for (std::size_t i = 1; i < n_values.size(); ++i)
    if (n_values[i] <= n_values[i - 1])
      throw std::invalid_argument("config: n_values must be strictly increasing");
  if (!(atol > 0.0)) throw std::invalid_argument("config: atol must be positive");
  if (profile.empty()) throw std::invalid_argument("config: profile must be nonempty");
}

bool IdentitiesReport::all_within(double tol) const {
  for (const auto& s : identities)
    if (s.max_residual >= tol) return false;
  return true;
}

IdentitiesReport run_identities(std::size_t trials, std::uint64_t seed, double tol) {
  if (trials < 1) throw std::invalid_argument("run_identities requires trials >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("run_identities requires tol > 0");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> sym(-1.0, 1.0);

  IdentitySummary antipodal{"lemma_3_2"};
  IdentitySummary order2_plain{"lemma_4_1"};
  IdentitySummary order2_tilde{"lemma_4_2"};
  IdentitySummary leibniz{"leibniz"};
  IdentitySummary kato{"kato"};
  IdentitySummary gn{"gagliardo_nirenberg"};
  IdentitySummary l33{"lemma_3_3"};
  IdentitySummary l43{"lemma_4_3"};
  IdentitySummary eps{"epsilon_lemma"};
  IdentitySummary adjoint{"summation_by_parts"};
  IdentitySummary twopoint{"twopoint_I1_vs_quadrature"};
  IdentitySummary invariance{"ledger_interior_invariance"};

  const std::size_t quad_trials = std::min<std::size_t>(trials, 25);

  for (std::size_t t = 0; t < trials; ++t) {
    const VerblunskySequence seq = random_sequence(rng, 8, 0.95);
    track(antipodal, antipodal_identity(seq));
    const Order2Residuals o2 = order2_identity(seq);
    track(order2_plain, o2.plain);
    track(order2_tilde, o2.tilde);

    const ComplexSequence f = random_complex(rng, 8, 1.0);
    const ComplexSequence g = random_complex(rng, 8, 1.0);
    track(leibniz, leibniz_check(f, g));
    double kato_v = 0.0;
    for (const auto& r : kato_check(f)) kato_v = std::max(kato_v, violation(r));
    track(kato, kato_v);
    track(gn, violation(gn_inequality(f)));
    double v33 = 0.0;
    for (const auto& r : lemma33_bounds(random_sequence(rng, 8, 0.49))) v33 = std::max(v33, violation(r));
    track(l33, v33);
    double v43 = 0.0;
    for (const auto& r : lemma43_bounds(seq)) v43 = std::max(v43, violation(r));
    track(l43, v43);
    double a = sym(rng);
    if (std::abs(a) < 1e-3) a = a < 0.0 ? -1e-3 : 1e-3;
    const ComplexSequence b = random_complex(rng, 3, 1.0);
    track(eps, violation(epsilon_lemma(b.at(0), b.at(1), b.at(2), a)));
    track(adjoint, adjoint_identity_residual(f, g));

    if (t < quad_trials) {
      const double th1 = angle(rng);
      double th2 = angle(rng);
      while (std::abs(std::remainder(th1 - th2, 2.0 * std::numbers::pi)) < 0.2) th2 = angle(rng);
      const VerblunskySequence small = random_sequence(rng, 6, 0.6);
      try {
        const double closed = twopoint_I1(small, th1, th2);
        const std::size_t n = small.size();
        const BernsteinSzegoWeight w(small, n);
        const BernsteinSzegoWeight w1 = BernsteinSzegoWeight::shifted(small, n, 1);
        const SingularityProfile profile({{th1, 1}, {th2, 1}});
        auto integrand = [&](double theta) -> Complex {
          return Complex{profile.weight(theta) * std::log(w.eval(theta) / w1.eval(theta)), 0.0};
        };
        const double quad = periodic_mean(integrand, 1e-12).real();
        track(twopoint, std::abs(closed - quad));
      } catch (const QuadratureError&) {
        ++twopoint.failures;
      }

      try {
        VerblunskySequence base = random_sequence(rng, 16, 0.6);
        std::vector<Complex> perturbed = base.values();
        for (std::size_t j = 5; j < 10; ++j) {
          const double r = 0.6 * std::sqrt(0.5 * (sym(rng) + 1.0));
          perturbed[j] = std::polar(r, angle(rng));
        }
        const SumRuleLedger l1 = twopoint_ledger(base, th1, th2, 14, 1e-12);
        const SumRuleLedger l2 =
            twopoint_ledger(VerblunskySequence(std::move(perturbed)), th1, th2, 14, 1e-12);
        track(invariance, std::abs(l1.residual - l2.residual));
      } catch (const QuadratureError&) {
        ++invariance.failures;
      }
    }
  }

  IdentitiesReport report;
  report.identities = {antipodal, order2_plain, order2_tilde, leibniz,   kato, gn,
                       l33,       l43,          eps,          adjoint,   twopoint, invariance};
  return report;
}

namespace {

std::vector<ConvergenceRow> run_table(const ExperimentConfig& config) {
  config.validate();
  const SingularityProfile profile(config.profile);

  std::optional<VerblunskySequence> fixed;
  if (config.alpha_file) fixed = load_alpha_file(*config.alpha_file);

  std::vector<ConvergenceRow> table;
  table.reserve(config.n_values.size());
  for (const std::size_t n : config.n_values) {
    ConvergenceRow row;
    row.n = n;
    try {
      VerblunskySequence seq = [&] {
        if (fixed) {
          std::vector<Complex> vals(n);
          for (std::size_t j = 0; j < n; ++j) vals[j] = fixed->at(static_cast<std::int64_t>(j));
          return VerblunskySequence(std::move(vals));
        }
        FamilySpec spec = config.family;
        spec.length = n;
        return generate(spec);
      }();
      const BernsteinSzegoWeight w(seq, n);
      auto weight_eval = [&](double theta) { return w.eval(theta); };
      const IntegralResult entropy = entropy_functional(weight_eval, profile, config.atol);
      row.entropy_value = entropy.real();
      // Exact for truncated weights: the unweighted entropy equals
      // sum log(1 - |alpha_j|^2). Quadrature cannot resolve the weight's
      // exponentially narrow dip once that sum is far from zero.
      double szego = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        szego += std::log(1.0 - std::norm(seq.at(static_cast<std::int64_t>(j))));
      row.szego_value = szego;
      row.rhs_partial = rhs_general(seq, profile).back();
      row.quad_error = entropy.est_error;
    } catch (const QuadratureError&) {
      row.failed = true;
    }
    table.push_back(row);
  }
  return table;
}

}  // namespace

std::vector<ConvergenceRow> run_theorem_trend(const ExperimentConfig& config) {
  return run_table(config);
}

std::vector<ConvergenceRow> run_conjecture_probe(const ExperimentConfig& config) {
  int total = 0;
  for (const auto& pt : config.profile) total += pt.multiplicity;
  if (total < 3)
    throw std::invalid_argument("conjecture probe requires total multiplicity >= 3");
  return run_table(config);
}

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void write_report(const std::vector<ConvergenceRow>& table, ReportFormat format,
                  std::ostream& out) {
  if (format == ReportFormat::Csv) {
    out << "n,entropy_value,szego_value,rhs_partial,quad_error\n";
    for (const auto& row : table) {
      if (row.failed) {
        out << row.n << ",quadrature_failure,,,\n";
        continue;
      }
      out << row.n << ',' << fmt17(row.entropy_value) << ',' << fmt17(row.szego_value) << ','
          << fmt17(row.rhs_partial) << ',' << fmt17(row.quad_error) << '\n';
    }
    return;
  }
  json doc = json::array();
  for (const auto& row : table) {
    json obj;
    obj["n"] = row.n;
    if (row.failed) {
      obj["failed"] = true;
    } else {
      obj["entropy_value"] = row.entropy_value;
      obj["szego_value"] = row.szego_value;
      obj["rhs_partial"] = row.rhs_partial;
      obj["quad_error"] = row.quad_error;
    }
    doc.push_back(obj);
  }
  out << doc.dump(2) << '\n';
}

void emit_report(const std::vector<ConvergenceRow>& table, ReportFormat format,
                 const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  write_report(table, format, out);
  if (!out) throw std::runtime_error("write failure: " + path);
}

namespace {

FamilySpec parse_family(const json& j) {
  FamilySpec spec;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "zero") {
    spec.kind = FamilySpec::Kind::Zero;
  } else if (kind == "geometric") {
    spec.kind = FamilySpec::Kind::Geometric;
    spec.c = j.at("c").get<double>();
    spec.lambda = j.at("lambda").get<double>();
  } else if (kind == "power") {
    spec.kind = FamilySpec::Kind::Power;
    spec.c = j.at("c").get<double>();
    spec.p = j.at("p").get<double>();
    spec.omega = j.value("omega", 0.0);
  } else if (kind == "modal") {
    spec.kind = FamilySpec::Kind::Modal;
    spec.p = j.at("p").get<double>();
    for (const auto& mode : j.at("modes"))
      spec.modes.emplace_back(mode.at(0).get<double>(), mode.at(1).get<double>());
  } else if (kind == "random") {
    spec.kind = FamilySpec::Kind::Random;
    spec.seed = j.at("seed").get<std::uint64_t>();
    spec.radius = j.at("radius").get<double>();
  } else {
    throw std::invalid_argument("unknown family kind: " + kind);
  }
  spec.length = j.value("length", std::size_t{0});
  return spec;
}

}  // namespace

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config parse error: ") + e.what());
  }
  try {
    ExperimentConfig config;
    if (doc.contains("family")) config.family = parse_family(doc.at("family"));
    if (doc.contains("alpha_file")) config.alpha_file = doc.at("alpha_file").get<std::string>();
    const auto& prof = doc.at("profile");
    if (prof.is_string()) {
      config.profile = parse_profile(prof.get<std::string>());
    } else {
      for (const auto& pt : prof)
        config.profile.push_back({pt.at(0).get<double>(), pt.at(1).get<int>()});
    }
    config.n_values = doc.at("n_values").get<std::vector<std::size_t>>();
    config.atol = doc.value("atol", 1e-9);
    config.output_path = doc.value("output_path", std::string{});
    const std::string fmt = doc.value("format", std::string{"csv"});
    if (fmt == "csv") config.format = ReportFormat::Csv;
    else if (fmt == "json") config.format = ReportFormat::Json;
    else throw std::invalid_argument("unknown format: " + fmt);
    config.validate();
    return config;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config field error: ") + e.what());
  }
}

VerblunskySequence load_alpha_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open alpha file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("alpha file parse error: ") + e.what());
  }
  std::vector<Complex> vals;
  for (const auto& pair : doc)
    vals.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
  return VerblunskySequence(std::move(vals));
}

std::vector<SingularityPoint> parse_profile(const std::string& text) {
  std::vector<SingularityPoint> points;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("profile entry must be theta:mult, got: " + item);
    points.push_back({std::stod(item.substr(0, colon)), std::stoi(item.substr(colon + 1))});
  }
  if (points.empty()) throw std::invalid_argument("empty profile");
  return points;
}

}  // namespace opuc
