#include <benchmark/benchmark.h>

#include <numbers>

#include "opuc/quadrature.hpp"
#include "opuc/sum_rules.hpp"
#include "opuc/weights.hpp"

namespace {

opuc::VerblunskySequence make_seq(std::size_t n) {
  opuc::FamilySpec spec;
  spec.kind = opuc::FamilySpec::Kind::Power;
  spec.c = 0.5;
  spec.p = 1.0 / 3.0;
  spec.length = n;
  return opuc::generate(spec);
}

void BM_weight_eval(benchmark::State& state) {
  const auto seq = make_seq(static_cast<std::size_t>(state.range(0)));
  const opuc::BernsteinSzegoWeight w(seq, seq.size());
  double theta = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(w.eval(theta));
    theta += 1e-3;
  }
}
BENCHMARK(BM_weight_eval)->Arg(64)->Arg(256)->Arg(1024);

void BM_entropy_functional(benchmark::State& state) {
  const auto seq = make_seq(static_cast<std::size_t>(state.range(0)));
  const opuc::BernsteinSzegoWeight w(seq, seq.size());
  const opuc::SingularityProfile profile({{0.0, 1}});
  for (auto _ : state) {
    auto r = opuc::entropy_functional([&](double t) { return w.eval(t); }, profile, 1e-9);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_entropy_functional)->Arg(32)->Arg(128);

void BM_antipodal_ledger(benchmark::State& state) {
  const auto seq = make_seq(16);
  for (auto _ : state) {
    auto l = opuc::antipodal_iterated(seq, 8, 1e-9);
    benchmark::DoNotOptimize(l);
  }
}
BENCHMARK(BM_antipodal_ledger);

void BM_identity_residuals(benchmark::State& state) {
  const auto seq = make_seq(8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(opuc::antipodal_identity(seq));
    benchmark::DoNotOptimize(opuc::order2_identity(seq));
  }
}
BENCHMARK(BM_identity_residuals);

}  // namespace

BENCHMARK_MAIN();
