#include <doctest.h>

#include <functional>
#include <map>
#include <random>

#include "sfc/automata.hpp"
#include "sfc/error.hpp"

using namespace sfc;

namespace {

const Alphabet AB("ab");
const Alphabet A1("a");

// Reference semantics: does r match w[i, j)?
bool denotes(const Regex& r, const Word& w, std::size_t i, std::size_t j) {
  using K = Regex::Kind;
  switch (r.kind) {
    case K::Empty: return false;
    case K::Epsilon: return i == j;
    case K::Letter: return j == i + 1 && w[i] == r.letter;
    case K::Union: return denotes(r.kids[0], w, i, j) || denotes(r.kids[1], w, i, j);
    case K::Intersect: return denotes(r.kids[0], w, i, j) && denotes(r.kids[1], w, i, j);
    case K::Complement: return !denotes(r.kids[0], w, i, j);
    case K::Concat:
      for (std::size_t k = i; k <= j; ++k)
        if (denotes(r.kids[0], w, i, k) && denotes(r.kids[1], w, k, j)) return true;
      return false;
    case K::Star:
      if (i == j) return true;
      for (std::size_t k = i + 1; k <= j; ++k)
        if (denotes(r.kids[0], w, i, k) && denotes(r, w, k, j)) return true;
      return false;
  }
  return false;
}

Regex random_regex(std::mt19937& rng, int budget) {
  std::uniform_int_distribution<int> pick(0, 9);
  if (budget <= 1) {
    int x = pick(rng);
    if (x == 0) return Regex::epsilon();
    if (x == 1) return Regex::empty();
    return Regex::sym(x % 2);
  }
  switch (pick(rng) % 5) {
    case 0: return Regex::unary(Regex::Kind::Star, random_regex(rng, budget - 1));
    case 1: return Regex::unary(Regex::Kind::Complement, random_regex(rng, budget - 1));
    case 2: return Regex::binary(Regex::Kind::Union, random_regex(rng, budget / 2), random_regex(rng, budget / 2));
    case 3:
      return Regex::binary(Regex::Kind::Intersect, random_regex(rng, budget / 2), random_regex(rng, budget / 2));
    default:
      return Regex::binary(Regex::Kind::Concat, random_regex(rng, budget / 2), random_regex(rng, budget / 2));
  }
}

}  // namespace

TEST_CASE("regex parsing") {
  auto a = Regex::sym(0), b = Regex::sym(1);
  CHECK(parse_regex("(ab)*", AB) ==
        Regex::unary(Regex::Kind::Star, Regex::binary(Regex::Kind::Concat, a, b)));
  CHECK(parse_regex("aa+bb", AB) == Regex::binary(Regex::Kind::Union, Regex::binary(Regex::Kind::Concat, a, a),
                                                  Regex::binary(Regex::Kind::Concat, b, b)));
  CHECK(parse_regex("~a*", AB) ==
        Regex::unary(Regex::Kind::Complement, Regex::unary(Regex::Kind::Star, a)));
  try {
    parse_regex("((a", AB);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 3);
  }
  CHECK_THROWS_AS(parse_regex("c", AB), ParseError);
  CHECK_THROWS_AS(parse_regex("a+", AB), ParseError);
}

TEST_CASE("compile denotation examples") {
  auto d = compile("(ab)*", AB);
  CHECK(d.accepts("abab"));
  CHECK_FALSE(d.accepts("aba"));
  CHECK(is_empty(compile("%", AB)));
  auto all = compile("~(%)", A1);
  for (const auto& w : all_words(1, 6)) CHECK(all.accepts(w));
  CHECK_THROWS_AS(d.accepts("abc"), InputError);
}

TEST_CASE("minimization") {
  auto d = minimize(compile("(ab)*", AB));
  CHECK(d.states() == 3);
  CHECK(d.is_final(d.initial()));
  CHECK(minimize(compile("a*", A1)).states() == 1);
  CHECK(isomorphic(minimize(d), d));
  CHECK(minimize(minimize(d)) == minimize(d));
}

TEST_CASE("minimal DFA matches the Nerode count on short words") {
  // Distinguish prefixes of length <= 3 by suffixes of length <= 4.
  for (const char* re : {"(ab)*", "(aa+bb)*", "a*ba*", "(a+b)*aa(a+b)*", "~(b*)&(ab+b)*"}) {
    auto d = compile(re, AB);
    std::map<std::vector<bool>, int> classes;
    for (const auto& u : all_words(2, 3)) {
      std::vector<bool> sig;
      for (const auto& v : all_words(2, 4)) {
        Word uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        sig.push_back(d.accepts(uv));
      }
      classes[sig];
    }
    CHECK_MESSAGE(classes.size() == d.states(), re);
  }
}

TEST_CASE("boolean operations") {
  auto even = compile("(aa)*", A1), odd = compile("a(aa)*", A1);
  CHECK(is_empty(product(even, odd, BoolOp::Intersection)));
  auto u = product(even, complement(even), BoolOp::Union);
  CHECK(equivalent(u, universal_language(A1)));
  auto diff = product(compile("a*", A1), even, BoolOp::Difference);
  for (std::size_t n = 0; n <= 10; ++n) CHECK(diff.accepts(Word(n, 0)) == (n % 2 == 1));
  auto x = compile("(a+b)*a", AB), y = compile("b*ab*", AB);
  CHECK(equivalent(product(x, y, BoolOp::Difference), product(x, complement(y), BoolOp::Intersection)));
  CHECK(is_empty(product(x, x, BoolOp::SymmetricDifference)));
}

TEST_CASE("language operations") {
  auto a = letter_language(AB, 0), b = letter_language(AB, 1);
  CHECK(equivalent(star(concat(a, b)), compile("(ab)*", AB)));
  CHECK(equivalent(plus(a), compile("aa*", AB)));
  CHECK(equivalent(power(compile("a+b", AB), 3), compile("(a+b)(a+b)(a+b)", AB)));
  CHECK(equivalent(power(a, 0), epsilon_language(AB)));
  CHECK(shortest_word(compile("b*ab", AB)) == Word{0, 1});
  CHECK_FALSE(shortest_word(empty_language(AB)).has_value());
}

TEST_CASE("all_words is length-lexicographic") {
  auto ws = all_words(2, 2);
  REQUIRE(ws.size() == 7);
  CHECK(ws[0].empty());
  CHECK(ws[1] == Word{0});
  CHECK(ws[3] == Word{0, 0});
  CHECK(ws[6] == Word{1, 1});
}

TEST_CASE("random regexes agree with the reference semantics") {
  std::mt19937 rng(12345);
  auto words = all_words(2, 8);
  for (int t = 0; t < 150; ++t) {
    Regex r = random_regex(rng, 12);
    auto d = compile(r, AB);
    // Round trip through the printer too.
    CHECK(equivalent(d, compile(r.to_string(AB), AB)));
    for (const auto& w : words) {
      if (denotes(r, w, 0, w.size()) != d.accepts(w)) {
        FAIL_CHECK("mismatch on " << r.to_string(AB) << " word " << AB.decode(w));
        break;
      }
    }
  }
}

TEST_CASE("alphabet validation") {
  CHECK_THROWS_AS(Alphabet(""), InputError);
  CHECK_THROWS_AS(Alphabet("aa"), InputError);
  CHECK_THROWS_AS(Alphabet("a*"), InputError);
  CHECK(AB.decode(AB.encode("abba")) == "abba");
}
