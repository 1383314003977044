#include <benchmark/benchmark.h>

#include "galcong/bounds.hpp"
#include "galcong/engine.hpp"
#include "galcong/modforms.hpp"
#include "galcong/modpoly.hpp"
#include "galcong/number_field.hpp"
#include "galcong/weil.hpp"

using namespace galcong;

namespace {

IntPoly ip(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(std::move(v));
}

void BM_FactorModP(benchmark::State& state) {
  // x^n − 1 splits completely modulo 1009 when n | 1008
  std::vector<Integer> c(static_cast<std::size_t>(state.range(0)) + 1, 0);
  c.front() = -1;
  c.back() = 1;
  const IntPoly f(std::move(c));
  for (auto _ : state) benchmark::DoNotOptimize(factor_mod_p(f, Integer(1009)));
}
BENCHMARK(BM_FactorModP)->Arg(12)->Arg(48)->Arg(144);

void BM_WeilTest(benchmark::State& state) {
  // (T² + 24T + 2048)^m: Weil of weight 11 at q = 2
  IntPoly p = ip({1});
  for (long i = 0; i < state.range(0); ++i) p = p * ip({2048, 24, 1});
  for (auto _ : state) benchmark::DoNotOptimize(is_weil_integer_poly(p, Integer(2), 11));
}
BENCHMARK(BM_WeilTest)->Arg(1)->Arg(2)->Arg(4);

void BM_BoundEval(benchmark::State& state) {
  BoundParams p;
  p.n = 2;
  p.b = static_cast<unsigned long>(state.range(0));
  p.e = 1;
  p.q = Integer(5);
  for (auto _ : state) {
    const BoundExpr B = make_bound(BoundKind::CTilde, p);
    benchmark::DoNotOptimize(threshold_value(B));
  }
}
BENCHMARK(BM_BoundEval)->Arg(11)->Arg(39);

void BM_PrimesAbove(benchmark::State& state) {
  const NumberField E(ip({1, -1, 1, -1, 1}));  // Q(ζ_10) = Q(ζ_5)
  const Integer ell(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(primes_above(E, ell));
}
BENCHMARK(BM_PrimesAbove)->Arg(11)->Arg(1009)->Arg(1000003);

void BM_Eigenforms(benchmark::State& state) {
  const auto k = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eigenforms(k, 50));
}
BENCHMARK(BM_Eigenforms)->Arg(12)->Arg(24)->Arg(36)->Unit(benchmark::kMillisecond);

void BM_DetectRamanujan(benchmark::State& state) {
  const Eigenform f = eigenforms(12, 97).at(0);
  for (auto _ : state) benchmark::DoNotOptimize(detect_congruences(f, ScanMode::EisensteinScan, 97));
}
BENCHMARK(BM_DetectRamanujan)->Unit(benchmark::kMillisecond);

void BM_RunTheorem(benchmark::State& state) {
  const Integer ell("16777259");
  LocalDescriptorU u;
  u.ell = ell;
  u.e_u = 1;
  u.e_cap = 1;
  u.ht = {0, 11};
  u.tame_chars = {TameCharacter(ell, 1, 0), TameCharacter(ell, 1, 11)};
  u.semistable_flag = {SemistableKind::Crystalline, 1};
  const auto P = CharPolyOverE::from_rational(NumberField::rationals(), to_rat(ip({2048, 24, 1})), Integer(2));
  const RepDescriptor V{2, NumberField::rationals(), 11, LocalDescriptorV{P, true}, u};
  const PrimeIdeal lambda = primes_above(NumberField::rationals(), ell).at(0);
  for (auto _ : state) benchmark::DoNotOptimize(run_theorem(V, V, lambda, Theorem::T11, true));
}
BENCHMARK(BM_RunTheorem)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
