#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "sfc/kernels.hpp"
#include "sfc/monoid.hpp"
#include "sfc/semiring.hpp"

using namespace sfc;

namespace {

// Full transformation monoid on n points: generated by a cycle, a transposition and a merge.
const RightCayley& full_transformations(std::size_t n) {
  static std::map<std::size_t, RightCayley> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Element> id(n), cycle(n), swap(n), merge(n);
  for (Element i = 0; i < n; ++i) {
    id[i] = i;
    cycle[i] = static_cast<Element>((i + 1) % n);
    swap[i] = i;
    merge[i] = i;
  }
  std::swap(swap[0], swap[1]);
  merge[1] = 0;
  auto mul = [](const std::vector<Element>& x, const std::vector<Element>& y) {
    std::vector<Element> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = y[x[i]];
    return r;
  };
  auto c = close_generators<std::vector<Element>, VectorHash>(id, {cycle, swap, merge}, mul, 1u << 20, "bench");
  return cache.emplace(n, std::move(c.cayley)).first->second;
}

void BM_CayleySerial(benchmark::State& state) {
  const auto& g = full_transformations(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cayley_table_serial(g));
  state.counters["elements"] = static_cast<double>(g.n);
}

void BM_CayleyParallel(benchmark::State& state) {
  const auto& g = full_transformations(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cayley_table_parallel(g));
  state.counters["elements"] = static_cast<double>(g.n);
  state.counters["threads"] = kernel_threads();
}

struct ProductInput {
  IdempotentSemiring r;
  std::vector<Value> lhs, rhs;
};

ProductInput product_input(std::size_t count) {
  // 2^M for the 3125-element monoid is too wide for one word; use the 27-element T_3.
  const auto& g = full_transformations(3);
  auto m = std::make_shared<const FiniteMonoid>(g.n, 0, cayley_table_serial(g));
  ProductInput in{IdempotentSemiring::powerset(m), {}, {}};
  std::mt19937_64 rng(1);
  const Value mask = (Value{1} << g.n) - 1;
  for (std::size_t i = 0; i < count; ++i) {
    in.lhs.push_back(rng() & rng() & mask);
    in.rhs.push_back(rng() & rng() & mask);
  }
  return in;
}

void BM_ProductsSerial(benchmark::State& state) {
  auto in = product_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(products_serial(in.r, in.lhs, in.rhs));
}

void BM_ProductsParallel(benchmark::State& state) {
  auto in = product_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(products_parallel(in.r, in.lhs, in.rhs));
  state.counters["threads"] = kernel_threads();
}

}  // namespace

BENCHMARK(BM_CayleySerial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CayleyParallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProductsSerial)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProductsParallel)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
