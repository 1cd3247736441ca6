#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sfc {

using Symbol = int;
using Word = std::vector<Symbol>;
using State = std::uint32_t;

class Alphabet {
 public:
  Alphabet() = default;
  // Throws InputError on empty input, duplicates or non-alphanumeric symbols.
  explicit Alphabet(std::string_view symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  char symbol(Symbol i) const { return symbols_[static_cast<std::size_t>(i)]; }
  const std::string& symbols() const noexcept { return symbols_; }
  std::optional<Symbol> find(char c) const noexcept;
  // Throws InputError on a character outside the alphabet.
  Symbol index(char c) const;
  Word encode(std::string_view w) const;
  std::string decode(const Word& w) const;

  bool operator==(const Alphabet& o) const noexcept { return symbols_ == o.symbols_; }

 private:
  std::string symbols_;
};

struct Regex {
  enum class Kind { Empty, Epsilon, Letter, Union, Concat, Star, Complement, Intersect };
  Kind kind = Kind::Empty;
  Symbol letter = 0;
  std::vector<Regex> kids;

  static Regex empty() { return {}; }
  static Regex epsilon() { return {Kind::Epsilon, 0, {}}; }
  static Regex sym(Symbol a) { return {Kind::Letter, a, {}}; }
  static Regex binary(Kind k, Regex l, Regex r);
  static Regex unary(Kind k, Regex c);

  // Number of AST nodes.
  std::size_t size() const;
  std::string to_string(const Alphabet& a) const;
  bool operator==(const Regex&) const = default;
};

Regex parse_regex(std::string_view text, const Alphabet& alphabet);

// Complete deterministic automaton; delta is row-major (state * |A| + symbol).
class Dfa {
 public:
  Dfa() = default;
  Dfa(Alphabet alphabet, std::size_t states, State initial, std::vector<bool> finals,
      std::vector<State> delta);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t states() const noexcept { return finals_.size(); }
  State initial() const noexcept { return initial_; }
  bool is_final(State q) const { return finals_[q]; }
  const std::vector<bool>& finals() const noexcept { return finals_; }
  State next(State q, Symbol a) const { return delta_[q * alphabet_.size() + static_cast<std::size_t>(a)]; }
  const std::vector<State>& delta() const noexcept { return delta_; }

  State run(State q, const Word& w) const;
  bool accepts(const Word& w) const { return is_final(run(initial_, w)); }
  // Throws InputError on an unknown symbol.
  bool accepts(std::string_view w) const { return accepts(alphabet_.encode(w)); }

  bool operator==(const Dfa&) const = default;

 private:
  Alphabet alphabet_;
  State initial_ = 0;
  std::vector<bool> finals_;
  std::vector<State> delta_;
};

Dfa compile(const Regex& r, const Alphabet& alphabet);
Dfa compile(std::string_view regex_text, const Alphabet& alphabet);

Dfa minimize(const Dfa& d);

enum class BoolOp { Union, Intersection, Difference, SymmetricDifference };
Dfa product(const Dfa& d1, const Dfa& d2, BoolOp mode);
Dfa complement(const Dfa& d);

// Language operations; results are minimal.
Dfa concat(const Dfa& d1, const Dfa& d2);
Dfa star(const Dfa& d);
Dfa plus(const Dfa& d);
Dfa power(const Dfa& d, std::size_t n);
Dfa empty_language(const Alphabet& a);
Dfa epsilon_language(const Alphabet& a);
Dfa universal_language(const Alphabet& a);
Dfa letter_language(const Alphabet& a, Symbol s);

bool is_empty(const Dfa& d);
// Shortest accepted word (length-lexicographic least), if any.
std::optional<Word> shortest_word(const Dfa& d);
bool equivalent(const Dfa& d1, const Dfa& d2);
// Equal as labelled graphs after minimization.
bool isomorphic(const Dfa& d1, const Dfa& d2);

// All words of length <= maxlen in length-lexicographic order.
std::vector<Word> all_words(std::size_t alphabet_size, std::size_t maxlen);

}  // namespace sfc
