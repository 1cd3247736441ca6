#pragma once

#include <cstdint>
#include <memory>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sfc/automata.hpp"
#include "sfc/config.hpp"
#include "sfc/error.hpp"
#include "sfc/kernels.hpp"

namespace sfc {

class FiniteMonoid {
 public:
  FiniteMonoid() : FiniteMonoid(1, 0, {0}) {}
  // Checks shape and the identity law; associativity only if check_associativity.
  FiniteMonoid(std::size_t size, Element identity, std::vector<Element> table, bool check_associativity = false);

  std::size_t size() const noexcept { return size_; }
  Element identity() const noexcept { return identity_; }
  Element mul(Element x, Element y) const { return table_[x * size_ + y]; }
  const std::vector<Element>& table() const noexcept { return table_; }

  Element power(Element x, std::size_t k) const;
  bool is_idempotent(Element x) const { return mul(x, x) == x; }

  bool operator==(const FiniteMonoid&) const = default;

 private:
  std::size_t size_;
  Element identity_;
  std::vector<Element> table_;
};

// s^k for the least k >= 1 with s^k idempotent.
Element idempotent_power(const FiniteMonoid& m, Element s);
std::vector<Element> idempotents(const FiniteMonoid& m);
// Throws InputError if subset is not closed under multiplication.
bool is_aperiodic(const FiniteMonoid& m, const std::vector<Element>& subset);
bool is_aperiodic(const FiniteMonoid& m);
// First element s of subset with s^(w+1) != s^w, if any.
std::optional<Element> aperiodicity_witness(const FiniteMonoid& m, const std::vector<Element>& subset);
bool is_group(const FiniteMonoid& m);
bool is_closed(const FiniteMonoid& m, const std::vector<Element>& subset);

// A morphism A* -> M given by letter images, viewed as surjective onto its image.
class Morphism {
 public:
  Morphism() = default;
  Morphism(Alphabet alphabet, std::shared_ptr<const FiniteMonoid> codomain, std::vector<Element> letters);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const FiniteMonoid& monoid() const noexcept { return *codomain_; }
  std::shared_ptr<const FiniteMonoid> monoid_ptr() const noexcept { return codomain_; }
  Element letter(Symbol a) const { return letters_[static_cast<std::size_t>(a)]; }
  const std::vector<Element>& letters() const noexcept { return letters_; }
  // Sorted generated submonoid.
  const std::vector<Element>& image() const noexcept { return image_; }
  bool in_image(Element x) const { return in_image_[x]; }
  Element eval(const Word& w) const;

 private:
  Alphabet alphabet_;
  std::shared_ptr<const FiniteMonoid> codomain_;
  std::vector<Element> letters_;
  std::vector<Element> image_;
  std::vector<bool> in_image_;
};

struct RecognizedLanguage {
  Morphism morphism;
  std::vector<bool> accepting;  // indexed by element
  bool contains(const Word& w) const { return accepting[morphism.eval(w)]; }
  std::vector<Element> accepting_set() const;
};

// Minimal DFA of {w : accepting[alpha(w)]}; states start as the image of alpha.
Dfa recognized_dfa(const Morphism& alpha, const std::vector<bool>& accepting);

// Transition monoid of the minimal complete DFA.
RecognizedLanguage syntactic_morphism(const Dfa& d, const Config& cfg = {});

struct ProductMorphism {
  Morphism morphism;
  // Component tuple of each element of the (surjective) codomain.
  std::vector<std::vector<Element>> tuples;
};

// Codomain is the generated submonoid of the componentwise product.
ProductMorphism product_morphism(const Alphabet& alphabet, const std::vector<Morphism>& ms,
                                 const Config& cfg = {});

Morphism trivial_morphism(const Alphabet& alphabet);

// Generic closure of generator values under a product, identity first.
template <class T>
struct Closure {
  std::vector<T> elements;
  RightCayley cayley;
};

template <class T, class Hash, class Mul>
Closure<T> close_generators(const T& identity, const std::vector<T>& gens, Mul&& mul, std::size_t cap,
                            std::string_view what) {
  Closure<T> c;
  std::unordered_map<T, Element, Hash> ids;
  auto& cay = c.cayley;
  cay.k = gens.size();
  auto intern = [&](T x, Element parent, Symbol letter) -> Element {
    auto it = ids.find(x);
    if (it != ids.end()) return it->second;
    if (c.elements.size() >= cap)
      throw ResourceError(std::string(what) + " exceeds the cap of " + std::to_string(cap) + " elements");
    Element id = static_cast<Element>(c.elements.size());
    ids.emplace(x, id);
    c.elements.push_back(std::move(x));
    cay.parent.push_back(parent);
    cay.letter.push_back(letter);
    return id;
  };
  intern(identity, 0, -1);
  for (std::size_t i = 0; i < c.elements.size(); ++i)
    for (std::size_t a = 0; a < gens.size(); ++a) {
      T x = mul(c.elements[i], gens[a]);
      Element id = intern(std::move(x), static_cast<Element>(i), static_cast<Symbol>(a));
      cay.right.push_back(id);
    }
  cay.n = c.elements.size();
  return c;
}

// Morphism whose codomain is the closure; letter a maps to the generator a.
Morphism closure_morphism(const Alphabet& alphabet, const RightCayley& cayley);

struct VectorHash {
  template <class T>
  std::size_t operator()(const std::vector<T>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (const auto& x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

}  // namespace sfc
