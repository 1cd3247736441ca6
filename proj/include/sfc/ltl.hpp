#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sfc/automata.hpp"

namespace sfc {

struct LtlFormula {
  enum class Kind { Top, Min, Max, Letter, Not, And, Or, Until, Since };
  Kind kind = Kind::Top;
  Symbol letter = 0;
  std::shared_ptr<const Dfa> lang;  // Until/Since parameter
  std::string lang_text;            // its regex, for printing
  std::vector<std::shared_ptr<const LtlFormula>> kids;

  using Ptr = std::shared_ptr<const LtlFormula>;
  static Ptr top();
  static Ptr bottom();
  static Ptr min();
  static Ptr max();
  static Ptr letter_of(Symbol a);
  static Ptr negation(Ptr f);
  static Ptr conj(Ptr f, Ptr g);
  static Ptr disj(Ptr f, Ptr g);
  static Ptr implies(Ptr f, Ptr g);
  static Ptr until(Dfa l, std::string text, Ptr f, Ptr g);
  static Ptr since(Dfa l, std::string text, Ptr f, Ptr g);
  // F_L g = U_L(top, g); X g = U(bottom, g).
  static Ptr eventually(Dfa l, std::string text, Ptr g);
  static Ptr next(const Alphabet& a, Ptr g);

  bool pure_future() const;
  std::string to_string(const Alphabet& a) const;
};

// Prefix syntax: top, bot, min, max, letters, !f, not(f), and(f,g), or(f,g),
// implies(f,g), U[<regex>](f,g), S[<regex>](f,g), F[<regex>](f), X(f), P(f),
// Y(f); a missing [<regex>] means A*.
LtlFormula::Ptr parse_ltl(std::string_view text, const Alphabet& alphabet);

// Positions 0..|w|+1; 0 and |w|+1 are unlabeled.
bool eval_at(const LtlFormula& f, const Word& w, std::size_t i);
bool eval_word(const LtlFormula& f, const Word& w);
// Truth value at every position.
std::vector<bool> eval_all(const LtlFormula& f, const Word& w);

// Words of length <= maxlen where eval_word and d disagree.
std::vector<Word> compare_sampled(const LtlFormula& f, const Dfa& d, std::size_t maxlen);

}  // namespace sfc
