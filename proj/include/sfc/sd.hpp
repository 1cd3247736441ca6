#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sfc/oracles.hpp"

namespace sfc {

// A word showing K is not a prefix code: epsilon, or a word of K with a proper prefix in K.
std::optional<Word> prefix_code_violation(const Dfa& k);
bool is_prefix_code(const Dfa& k);

// uvw in K+, v in K^d, uv not in K+.
struct DelayWitness {
  Word u, v, w;
};

// Shortest witness (by |uvw|) against delay d. Throws InputError if K is not a prefix code or d == 0.
std::optional<DelayWitness> sync_delay_witness(const Dfa& k, std::size_t d);
bool has_sync_delay(const Dfa& k, std::size_t d);
std::optional<std::size_t> min_sync_delay(const Dfa& k, std::size_t dmax);

std::optional<Word> common_word(const Dfa& k, const Dfa& l);
bool are_disjoint(const Dfa& k, const Dfa& l);
// Shortest word of KL with two distinct factorizations.
std::optional<Word> ambiguity_witness(const Dfa& k, const Dfa& l);
bool is_unambiguous_concat(const Dfa& k, const Dfa& l);

struct SdExpr {
  enum class Kind { Empty, Letter, Intersect, DisjointUnion, UnambiguousConcat, Star };
  Kind kind = Kind::Empty;
  Symbol letter = 0;
  std::size_t delay = 0;            // Star
  std::string c_regex;              // Intersect
  std::size_t offset = 0;           // position in the source text
  std::vector<std::shared_ptr<const SdExpr>> kids;

  std::string to_string(const Alphabet& a) const;
};

// Text format: star(E, d=2), uconcat(E,F), dunion(E,F), capC(E, "<regex>"),
// letters, '%' for the empty language. Lines `NAME = expr` define names
// usable later; the last line without '=' is the expression.
std::shared_ptr<const SdExpr> parse_sd_expression(std::string_view text, const Alphabet& alphabet);

struct SdViolation {
  std::size_t offset = 0;
  std::string node;
  std::string message;
  std::string witness;
};

struct SdValidation {
  Dfa dfa;
  std::vector<SdViolation> violations;
  bool ok() const { return violations.empty(); }
};

SdValidation validate_sd_expression(const SdExpr& e, const Alphabet& alphabet, const ClassSelector& c,
                                    const Config& cfg = {});

}  // namespace sfc
