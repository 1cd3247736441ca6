#include "sfc/kernels.hpp"

#include <algorithm>

#include "sfc/semiring.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sfc {

namespace {

// Row x of the table: x * e for every e, following BFS parents so each entry
// is one Cayley lookup.
void fill_row(const RightCayley& g, std::size_t x, Element* row) {
  row[0] = static_cast<Element>(x);
  for (std::size_t e = 1; e < g.n; ++e)
    row[e] = g.right[row[g.parent[e]] * g.k + static_cast<std::size_t>(g.letter[e])];
}

constexpr std::size_t kParallelRows = 256;
constexpr std::size_t kParallelProducts = 1u << 14;

void sort_unique(std::vector<Value>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

int kernel_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<Element> cayley_table_serial(const RightCayley& g) {
  std::vector<Element> t(g.n * g.n);
  for (std::size_t x = 0; x < g.n; ++x) fill_row(g, x, t.data() + x * g.n);
  return t;
}

std::vector<Element> cayley_table_parallel(const RightCayley& g) {
  std::vector<Element> t(g.n * g.n);
  const long long n = static_cast<long long>(g.n);
#pragma omp parallel for schedule(static)
  for (long long x = 0; x < n; ++x) fill_row(g, static_cast<std::size_t>(x), t.data() + x * n);
  return t;
}

std::vector<Element> cayley_table(const RightCayley& g) {
  if (g.n >= kParallelRows && kernel_threads() > 1) return cayley_table_parallel(g);
  return cayley_table_serial(g);
}

std::vector<Value> products_serial(const IdempotentSemiring& r, const std::vector<Value>& lhs,
                                   const std::vector<Value>& rhs) {
  std::vector<Value> out;
  out.reserve(lhs.size() * rhs.size());
  for (Value x : lhs)
    for (Value y : rhs) out.push_back(r.mul(x, y));
  sort_unique(out);
  return out;
}

std::vector<Value> products_parallel(const IdempotentSemiring& r, const std::vector<Value>& lhs,
                                     const std::vector<Value>& rhs) {
  const long long n = static_cast<long long>(lhs.size());
  const std::size_t m = rhs.size();
  std::vector<Value> out(lhs.size() * m);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) out[static_cast<std::size_t>(i) * m + j] = r.mul(lhs[i], rhs[j]);
  sort_unique(out);
  return out;
}

std::vector<Value> products(const IdempotentSemiring& r, const std::vector<Value>& lhs,
                            const std::vector<Value>& rhs) {
  if (lhs.size() * rhs.size() >= kParallelProducts && kernel_threads() > 1) return products_parallel(r, lhs, rhs);
  return products_serial(r, lhs, rhs);
}

}  // namespace sfc
