#include <benchmark/benchmark.h>

#include "tower/countability.hpp"
#include "tower/hfset.hpp"
#include "tower/real.hpp"
#include "tower/relation.hpp"

namespace {

void BM_PairUnpair(benchmark::State& state) {
  const tower::Nat p = tower::pow(tower::Nat(3), tower::Nat(static_cast<std::uint64_t>(state.range(0))));
  for (auto _ : state) {
    auto r = tower::unpair(tower::pair(p, p));
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_PairUnpair)->Arg(10)->Arg(100)->Arg(1000);

void BM_DyadicMul(benchmark::State& state) {
  const auto a = tower::Dyadic::from_parts(tower::Dyadic::Int(123456789), 40);
  const auto b = tower::Dyadic::from_parts(tower::Dyadic::Int(-987654321), 17);
  for (auto _ : state) benchmark::DoNotOptimize(a * b + a);
}
BENCHMARK(BM_DyadicMul);

void BM_InverseThree(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    // fresh real each round: approximations are memoized
    auto x = tower::inverse(tower::from_dyadic(tower::Dyadic(3)), 4);
    benchmark::DoNotOptimize(x.approx(n));
  }
}
BENCHMARK(BM_InverseThree)->Arg(30)->Arg(200)->Arg(1000);

void BM_RealPolynomial(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    tower::Real x = tower::inverse(tower::Real::from_dyadic(tower::Dyadic(7)), 64);
    tower::Real y = tower::pow(x, 5) - x * x + tower::Real::from_dyadic(tower::Dyadic(1));
    benchmark::DoNotOptimize(y.approx(n));
  }
}
BENCHMARK(BM_RealPolynomial)->Arg(30)->Arg(120);

void BM_Classify(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const tower::Carrier c = tower::Carrier::numbered(n);
  tower::Relation r(c);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) r.set(i, j);
  }
  for (auto _ : state) benchmark::DoNotOptimize(tower::classify(r));
}
BENCHMARK(BM_Classify)->Arg(8)->Arg(12)->Arg(32);

void BM_Closure(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const tower::Carrier c = tower::Carrier::numbered(n);
  tower::Relation r(c);
  for (std::size_t i = 0; i + 1 < n; ++i) r.set(i, i + 1);
  for (auto _ : state) benchmark::DoNotOptimize(tower::preorder_closure(r));
}
BENCHMARK(BM_Closure)->Arg(16)->Arg(64);

void BM_HfNatural(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tower::nat_to_hf(tower::Nat(n)));
}
BENCHMARK(BM_HfNatural)->Arg(6)->Arg(12);

void BM_EnumDyadics(benchmark::State& state) {
  const auto e = tower::enum_dyadics();
  std::uint64_t k = 0;
  for (auto _ : state) {
    auto d = e.forward(tower::Nat(k++));
    benchmark::DoNotOptimize(e.back(d));
  }
}
BENCHMARK(BM_EnumDyadics);

}  // namespace
BENCHMARK_MAIN();
