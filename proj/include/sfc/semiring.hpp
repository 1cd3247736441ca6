#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sfc/automata.hpp"
#include "sfc/config.hpp"
#include "sfc/kernels.hpp"
#include "sfc/monoid.hpp"

namespace sfc {

// A finite idempotent semiring, stored as a product of components packed into
// one 64-bit Value. A component is either an explicit table semiring or the
// powerset semiring (2^M, union, setwise product) of a finite monoid M, whose
// elements are bitsets over M.
class IdempotentSemiring {
 public:
  struct Table {
    std::size_t size = 0;
    std::vector<std::uint32_t> add, mul;  // row-major size*size
    std::uint32_t zero = 0, one = 0;
  };

  IdempotentSemiring();  // the Boolean semiring
  // Shape checks only; use validate_semiring for the axioms.
  static IdempotentSemiring table(Table t);
  static IdempotentSemiring powerset(std::shared_ptr<const FiniteMonoid> m);
  static IdempotentSemiring product(const std::vector<IdempotentSemiring>& parts);

  Value add(Value x, Value y) const;
  Value mul(Value x, Value y) const;
  Value zero() const noexcept;
  Value one() const noexcept;
  bool leq(Value x, Value y) const { return add(x, y) == y; }
  // r^k for the least k >= 1 with r^k idempotent.
  Value omega(Value x) const;
  // r^w + r^(w+1).
  Value sf_closure(Value x) const;

  std::size_t components() const;
  bool is_powerset(std::size_t c) const;
  const FiniteMonoid& powerset_monoid(std::size_t c) const;
  const Table& table_component(std::size_t c) const;
  std::uint64_t field(Value x, std::size_t c) const;
  Value with_field(Value x, std::size_t c, std::uint64_t v) const;
  // Powerset component c as a sorted element list.
  std::vector<Element> subset(Value x, std::size_t c) const;

  // Number of elements, or nullopt if it does not fit in 63 bits.
  std::optional<std::uint64_t> size() const;
  // All elements in increasing Value order; ResourceError above cap.
  std::vector<Value> elements(std::size_t cap = 1u << 20) const;
  // All y <= x, increasing; ResourceError above cap.
  std::vector<Value> below(Value x, std::size_t cap = 1u << 20) const;
  bool is_element(Value x) const;

  // "{0,1}" for a single powerset component, "(..,..)" for products, plain
  // integers for table components.
  std::string format(Value x) const;

  struct Impl;

 private:
  explicit IdempotentSemiring(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

struct SemiringReport {
  bool ok = true;
  std::string axiom;
  std::vector<Value> witness;
};

// Exhaustive over table components (powerset components hold by construction).
SemiringReport validate_semiring(const IdempotentSemiring& r);
// leq table over elements() order; only for small semirings.
std::vector<std::vector<bool>> canonical_order(const IdempotentSemiring& r);
std::vector<Value> downset(const IdempotentSemiring& r, const std::vector<Value>& s);
IdempotentSemiring powerset_semiring(const FiniteMonoid& m, const Config& cfg = {});

// A nice multiplicative rating map, determined by its letter images.
struct RatingMap {
  IdempotentSemiring semiring;
  Alphabet alphabet;
  std::vector<Value> letters;

  Value letter(Symbol a) const { return letters[static_cast<std::size_t>(a)]; }
  Value eval(const Word& w) const;
  // Sum over a finite language.
  Value eval(const std::vector<Word>& language) const;
};

RatingMap rho_alpha(const Morphism& alpha, const Config& cfg = {});
RatingMap product_rating_map(const std::vector<RatingMap>& rs);
// rho_* as a morphism onto its multiplicative image; elements() gives the values.
struct ImageMonoid {
  Morphism morphism;
  std::vector<Value> values;
};
ImageMonoid image_monoid(const RatingMap& rm, const Config& cfg = {});
// Closure of {0, 1, rho(a)} under + and *, sorted.
std::vector<Value> generated_subsemiring(const RatingMap& rm, std::size_t cap = 1u << 20);

// A downward closed subset of a semiring, stored as its antichain of maxima.
class DownSet {
 public:
  DownSet() = default;
  explicit DownSet(IdempotentSemiring r) : r_(std::move(r)) {}

  const IdempotentSemiring& semiring() const noexcept { return r_; }
  bool contains(Value x) const;
  // Adds the downset of x; true if the set grew.
  bool insert(Value x);
  bool insert_all(const std::vector<Value>& xs);
  bool empty() const noexcept { return max_.empty(); }
  // Sorted antichain.
  const std::vector<Value>& maxima() const noexcept { return max_; }
  // Every element, sorted; ResourceError above cap.
  std::vector<Value> elements(std::size_t cap = 1u << 20) const;
  bool subset_of(const DownSet& o) const;
  bool operator==(const DownSet& o) const { return max_ == o.max_; }

 private:
  IdempotentSemiring r_;
  std::vector<Value> max_;
};

}  // namespace sfc
