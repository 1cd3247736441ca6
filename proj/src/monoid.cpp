#include "sfc/monoid.hpp"

#include <algorithm>

namespace sfc {

FiniteMonoid::FiniteMonoid(std::size_t size, Element identity, std::vector<Element> table, bool check_associativity)
    : size_(size), identity_(identity), table_(std::move(table)) {
  if (size_ == 0) throw InputError("monoid must be nonempty");
  if (table_.size() != size_ * size_) throw InputError("monoid table must be size x size");
  if (identity_ >= size_) throw InputError("monoid identity out of range");
  for (Element x : table_)
    if (x >= size_) throw InputError("monoid table entry out of range");
  for (Element x = 0; x < size_; ++x)
    if (mul(identity_, x) != x || mul(x, identity_) != x)
      throw InputError("identity law fails at element " + std::to_string(x));
  if (check_associativity)
    for (Element x = 0; x < size_; ++x)
      for (Element y = 0; y < size_; ++y)
        for (Element z = 0; z < size_; ++z)
          if (mul(mul(x, y), z) != mul(x, mul(y, z)))
            throw InputError("associativity fails at (" + std::to_string(x) + "," + std::to_string(y) + "," +
                             std::to_string(z) + ")");
}

Element FiniteMonoid::power(Element x, std::size_t k) const {
  Element r = identity_;
  for (std::size_t i = 0; i < k; ++i) r = mul(r, x);
  return r;
}

Element idempotent_power(const FiniteMonoid& m, Element s) {
  Element p = s;
  while (!m.is_idempotent(p)) p = m.mul(p, s);
  return p;
}

std::vector<Element> idempotents(const FiniteMonoid& m) {
  std::vector<Element> out;
  for (Element x = 0; x < m.size(); ++x)
    if (m.is_idempotent(x)) out.push_back(x);
  return out;
}

bool is_closed(const FiniteMonoid& m, const std::vector<Element>& subset) {
  std::vector<bool> in(m.size());
  for (Element x : subset) {
    if (x >= m.size()) return false;
    in[x] = true;
  }
  for (Element x : subset)
    for (Element y : subset)
      if (!in[m.mul(x, y)]) return false;
  return true;
}

std::optional<Element> aperiodicity_witness(const FiniteMonoid& m, const std::vector<Element>& subset) {
  for (Element s : subset) {
    Element w = idempotent_power(m, s);
    if (m.mul(w, s) != w) return s;
  }
  return std::nullopt;
}

bool is_aperiodic(const FiniteMonoid& m, const std::vector<Element>& subset) {
  if (!is_closed(m, subset)) throw InputError("subset is not closed under multiplication");
  return !aperiodicity_witness(m, subset).has_value();
}

bool is_aperiodic(const FiniteMonoid& m) {
  for (Element s = 0; s < m.size(); ++s) {
    Element w = idempotent_power(m, s);
    if (m.mul(w, s) != w) return false;
  }
  return true;
}

bool is_group(const FiniteMonoid& m) {
  const Element one = m.identity();
  for (Element s = 0; s < m.size(); ++s) {
    bool inverse = false;
    for (Element t = 0; t < m.size() && !inverse; ++t) inverse = m.mul(s, t) == one && m.mul(t, s) == one;
    if (!inverse) return false;
  }
  return true;
}

Morphism::Morphism(Alphabet alphabet, std::shared_ptr<const FiniteMonoid> codomain, std::vector<Element> letters)
    : alphabet_(std::move(alphabet)), codomain_(std::move(codomain)), letters_(std::move(letters)) {
  if (!codomain_) throw InputError("morphism needs a codomain");
  if (letters_.size() != alphabet_.size()) throw InputError("morphism needs one image per letter");
  const auto& m = *codomain_;
  for (Element x : letters_)
    if (x >= m.size()) throw InputError("letter image out of range");
  in_image_.assign(m.size(), false);
  std::vector<Element> queue{m.identity()};
  in_image_[m.identity()] = true;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Element a : letters_) {
      Element y = m.mul(queue[i], a);
      if (!in_image_[y]) {
        in_image_[y] = true;
        queue.push_back(y);
      }
    }
  std::sort(queue.begin(), queue.end());
  image_ = std::move(queue);
}

Element Morphism::eval(const Word& w) const {
  Element x = codomain_->identity();
  for (Symbol a : w) x = codomain_->mul(x, letter(a));
  return x;
}

std::vector<Element> RecognizedLanguage::accepting_set() const {
  std::vector<Element> out;
  for (Element x = 0; x < accepting.size(); ++x)
    if (accepting[x]) out.push_back(x);
  return out;
}

Morphism closure_morphism(const Alphabet& alphabet, const RightCayley& cayley) {
  auto m = std::make_shared<const FiniteMonoid>(cayley.n, 0, cayley_table(cayley));
  std::vector<Element> letters(cayley.k);
  for (std::size_t a = 0; a < cayley.k; ++a) letters[a] = cayley.right[a];
  return Morphism(alphabet, std::move(m), std::move(letters));
}

Dfa recognized_dfa(const Morphism& alpha, const std::vector<bool>& accepting) {
  const auto& m = alpha.monoid();
  if (accepting.size() != m.size()) throw InputError("accepting set must have one flag per element");
  const auto& img = alpha.image();
  std::vector<State> state_of(m.size(), 0);
  for (std::size_t i = 0; i < img.size(); ++i) state_of[img[i]] = static_cast<State>(i);
  const std::size_t k = alpha.alphabet().size();
  std::vector<bool> fin(img.size());
  std::vector<State> delta(img.size() * k);
  for (std::size_t i = 0; i < img.size(); ++i) {
    fin[i] = accepting[img[i]];
    for (std::size_t a = 0; a < k; ++a)
      delta[i * k + a] = state_of[m.mul(img[i], alpha.letter(static_cast<Symbol>(a)))];
  }
  return minimize(Dfa(alpha.alphabet(), img.size(), state_of[m.identity()], std::move(fin), std::move(delta)));
}

RecognizedLanguage syntactic_morphism(const Dfa& input, const Config& cfg) {
  Dfa d = minimize(input);
  const std::size_t n = d.states(), k = d.alphabet().size();
  using Transformation = std::vector<State>;
  Transformation id(n);
  for (State q = 0; q < n; ++q) id[q] = q;
  std::vector<Transformation> gens(k, Transformation(n));
  for (std::size_t a = 0; a < k; ++a)
    for (State q = 0; q < n; ++q) gens[a][q] = d.next(q, static_cast<Symbol>(a));
  // (x.y)(q) = y(x(q)): read x first.
  auto compose = [n](const Transformation& x, const Transformation& y) {
    Transformation r(n);
    for (std::size_t q = 0; q < n; ++q) r[q] = y[x[q]];
    return r;
  };
  auto c = close_generators<Transformation, VectorHash>(id, gens, compose, cfg.monoid_cap, "syntactic monoid");
  RecognizedLanguage l;
  l.morphism = closure_morphism(d.alphabet(), c.cayley);
  l.accepting.resize(c.elements.size());
  for (std::size_t i = 0; i < c.elements.size(); ++i) l.accepting[i] = d.is_final(c.elements[i][d.initial()]);
  return l;
}

Morphism trivial_morphism(const Alphabet& alphabet) {
  return Morphism(alphabet, std::make_shared<const FiniteMonoid>(), std::vector<Element>(alphabet.size(), 0));
}

ProductMorphism product_morphism(const Alphabet& alphabet, const std::vector<Morphism>& ms, const Config& cfg) {
  for (const auto& m : ms)
    if (!(m.alphabet() == alphabet)) throw InputError("product_morphism: alphabet mismatch");
  using Tuple = std::vector<Element>;
  Tuple id;
  for (const auto& m : ms) id.push_back(m.monoid().identity());
  std::vector<Tuple> gens(alphabet.size());
  for (std::size_t a = 0; a < alphabet.size(); ++a)
    for (const auto& m : ms) gens[a].push_back(m.letter(static_cast<Symbol>(a)));
  auto mul = [&ms](const Tuple& x, const Tuple& y) {
    Tuple r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = ms[i].monoid().mul(x[i], y[i]);
    return r;
  };
  auto c = close_generators<Tuple, VectorHash>(id, gens, mul, cfg.monoid_cap, "product monoid");
  return {closure_morphism(alphabet, c.cayley), std::move(c.elements)};
}

}  // namespace sfc
