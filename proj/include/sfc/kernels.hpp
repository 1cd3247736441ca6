#pragma once

// Data-parallel inner loops. Each kernel has a serial reference and an
// OpenMP version with identical output.

#include <cstdint>
#include <vector>

namespace sfc {

using Element = std::uint32_t;
using Value = std::uint64_t;
class IdempotentSemiring;

// Right Cayley graph of a monoid generated from index 0 (the identity):
// right[x * k + a] = x * gen_a; every x > 0 equals parent[x] * gen_letter[x].
struct RightCayley {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<Element> right;
  std::vector<Element> parent;
  std::vector<int> letter;
};

// Full multiplication table (row-major n*n) from the right Cayley graph.
std::vector<Element> cayley_table_serial(const RightCayley& g);
std::vector<Element> cayley_table_parallel(const RightCayley& g);
std::vector<Element> cayley_table(const RightCayley& g);

// Sorted, deduplicated {x*y : x in lhs, y in rhs} in the semiring.
std::vector<Value> products_serial(const IdempotentSemiring& r, const std::vector<Value>& lhs,
                                   const std::vector<Value>& rhs);
std::vector<Value> products_parallel(const IdempotentSemiring& r, const std::vector<Value>& lhs,
                                     const std::vector<Value>& rhs);
std::vector<Value> products(const IdempotentSemiring& r, const std::vector<Value>& lhs,
                            const std::vector<Value>& rhs);

// Number of threads the parallel kernels will use (1 without OpenMP).
int kernel_threads();

}  // namespace sfc
