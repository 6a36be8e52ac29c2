#include "nsz/lp/oracles.hpp"
#include "nsz/lp/tcs_solver.hpp"
#include "nsz/ord_proofs.hpp"
#include "nsz/php_dual.hpp"

#include <benchmark/benchmark.h>

using namespace nsz;

static void BM_PlainDual(benchmark::State& state) {
  lp::TcsRequest req;
  req.family = state.range(0) == 0 ? Family::Php : Family::Ord;
  req.n = static_cast<int>(state.range(1));
  req.method = lp::TcsMethod::Dual;
  req.want_certificate = false;
  for (auto _ : state) benchmark::DoNotOptimize(lp::solve_tcs(req).value);
}
BENCHMARK(BM_PlainDual)->Args({0, 3})->Args({1, 4})->Unit(benchmark::kMillisecond);

static void BM_ColumnGeneration(benchmark::State& state) {
  lp::TcsRequest req;
  req.family = state.range(0) == 0 ? Family::Php : Family::Ord;
  req.n = static_cast<int>(state.range(1));
  req.mode = state.range(2) == 0 ? lp::SupportMode::Full : lp::SupportMode::Restricted;
  req.want_certificate = false;
  for (auto _ : state) benchmark::DoNotOptimize(lp::solve_tcs(req).value);
}
BENCHMARK(BM_ColumnGeneration)
    ->Args({0, 5, 1})
    ->Args({0, 6, 1})
    ->Args({1, 5, 0})
    ->Args({1, 5, 1})
    ->Unit(benchmark::kMillisecond);

static void BM_HoleSetSums(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto sums = lp::holeset_sums(n, 0, 1, 0, [n](PackedAssignment x) {
      return static_cast<Int128>(php_dual::scaled_d(n, decode_php_assignment(n, x)).get_si());
    });
    benchmark::DoNotOptimize(sums.data());
  }
}
BENCHMARK(BM_HoleSetSums)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_CubeOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto sys = std::make_shared<const AxiomSystem>(build_ord(n));
  lp::ReducedProblem problem(sys, lp::Support::full(*sys), SymmetryGroup::ord(n), lp::ProofSystem::Nullstellensatz);
  std::vector<Rational> d(problem.orbits().orbit_count(), Rational(1));
  lp::CubeOracle oracle;
  for (auto _ : state) benchmark::DoNotOptimize(oracle.separate(problem, d, 50).size());
}
BENCHMARK(BM_CubeOracle)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_MaxAbsExpDW(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(php_dual::max_abs_exp_dw(n).max_abs);
}
BENCHMARK(BM_MaxAbsExpDW)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_VerifyOrdProof(benchmark::State& state) {
  auto cert = ord_proofs::build_ord_proof(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_certificate(cert).ok);
}
BENCHMARK(BM_VerifyOrdProof)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

static void BM_VerifySosProof(benchmark::State& state) {
  auto cert = ord_proofs::build_sos_ord_proof(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_certificate(cert).ok);
}
BENCHMARK(BM_VerifySosProof)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
