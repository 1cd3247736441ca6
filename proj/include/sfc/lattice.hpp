#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace sfc {

// Subgroup of Z^n kept in row echelon (Hermite) form.
class IntegerLattice {
 public:
  using Vec = std::vector<std::int64_t>;

  explicit IntegerLattice(std::size_t dim = 0) : rows_(dim) {}

  std::size_t dim() const noexcept { return rows_.size(); }
  void add(Vec v);
  void add(const IntegerLattice& o);
  bool contains(Vec v) const;
  std::size_t rank() const;
  std::vector<Vec> basis() const;

 private:
  std::vector<std::optional<Vec>> rows_;  // rows_[c] has its first nonzero entry at c
};

}  // namespace sfc
