#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sfc/config.hpp"
#include "sfc/monoid.hpp"

namespace sfc {

// A finite prevariety, given by its canonical morphism.
struct FinitePrevariety {
  Morphism eta;

  // Trivial morphism: the class {empty, A*}.
  static FinitePrevariety st(const Alphabet& a);
  // Alphabet testable languages: eta maps a word to its set of letters.
  static FinitePrevariety alphabet_testable(const Alphabet& a);
};

enum class GroupClass { Mod, Amt, Gr };

using ClassSelector = std::variant<FinitePrevariety, GroupClass>;

std::string to_string(GroupClass g);

// Set of pairs over the codomain of a morphism.
class PairSet {
 public:
  explicit PairSet(std::size_t n = 0) : n_(n), bits_(n * n) {}
  std::size_t universe() const noexcept { return n_; }
  bool contains(Element s, Element t) const { return bits_[s * n_ + t]; }
  void insert(Element s, Element t) { bits_[s * n_ + t] = true; }
  // Lexicographically sorted.
  std::vector<std::pair<Element, Element>> pairs() const;
  std::size_t size() const;

 private:
  std::size_t n_;
  std::vector<bool> bits_;
};

PairSet c_pairs(const FinitePrevariety& c, const Morphism& alpha, const Config& cfg = {});
// Throws InputError if e is not idempotent.
std::vector<Element> c_orbit(const PairSet& pairs, const Morphism& alpha, Element e);

struct ModKernel {
  std::size_t stability_index = 1;
  std::vector<Element> kernel;
};
ModKernel mod_kernel_with_index(const Morphism& alpha, const Config& cfg = {});
std::vector<Element> mod_kernel(const Morphism& alpha, const Config& cfg = {});
std::vector<Element> amt_kernel(const Morphism& alpha, const Config& cfg = {});
std::vector<Element> gr_kernel(const Morphism& alpha);
std::vector<Element> group_kernel(GroupClass g, const Morphism& alpha, const Config& cfg = {});

// Elements s with a word w, alpha(w) = s, every letter count divisible by q.
std::vector<Element> amt_kernel_modular(const Morphism& alpha, std::size_t q);

// True iff the language of d belongs to the base class.
bool in_base_class(const ClassSelector& c, const Dfa& d, const Config& cfg = {});

}  // namespace sfc
