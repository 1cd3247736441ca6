#include <doctest.h>

#include <algorithm>

#include "sfc/error.hpp"
#include "sfc/monoid.hpp"

using namespace sfc;

namespace {

const Alphabet AB("ab");
const Alphabet A1("a");

FiniteMonoid z2() { return FiniteMonoid(2, 0, {0, 1, 1, 0}); }
FiniteMonoid one_zero() { return FiniteMonoid(2, 0, {0, 1, 1, 1}); }

// Sorted list of (is_idempotent, row multiset) per element: invariant under renumbering.
std::vector<std::vector<std::size_t>> fingerprint(const FiniteMonoid& m) {
  std::vector<std::vector<std::size_t>> out;
  for (Element x = 0; x < m.size(); ++x) {
    std::vector<std::size_t> row;
    row.push_back(m.is_idempotent(x));
    std::size_t fixes = 0, orbit = 0;
    for (Element y = 0; y < m.size(); ++y) {
      fixes += m.mul(x, y) == y;
      orbit += m.mul(y, x) == x;
    }
    row.push_back(fixes);
    row.push_back(orbit);
    std::size_t k = 1;
    while (m.power(x, k + 1) != m.power(x, 1) && k < m.size() + 1) ++k;
    row.push_back(k);
    out.push_back(row);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("syntactic monoid examples") {
  auto even = syntactic_morphism(compile("(aa)*", A1));
  CHECK(even.morphism.monoid().size() == 2);
  Element g = even.morphism.letter(0);
  CHECK(g != even.morphism.monoid().identity());
  CHECK(even.morphism.monoid().mul(g, g) == even.morphism.monoid().identity());
  CHECK(even.accepting_set() == std::vector<Element>{even.morphism.monoid().identity()});

  auto has_a = syntactic_morphism(compile("(a+b)*a(a+b)*", AB));
  const auto& m = has_a.morphism.monoid();
  REQUIRE(m.size() == 2);
  Element z = has_a.morphism.letter(0);
  CHECK(has_a.morphism.letter(1) == m.identity());
  CHECK(m.mul(z, z) == z);
  CHECK(has_a.accepting_set() == std::vector<Element>{z});

  auto all = syntactic_morphism(compile("(a+b)*", AB));
  CHECK(all.morphism.monoid().size() == 1);
  CHECK(all.accepting_set() == std::vector<Element>{0});
}

TEST_CASE("idempotent powers") {
  auto g = z2(), z = one_zero();
  CHECK(idempotent_power(g, 0) == 0);
  CHECK(idempotent_power(g, 1) == 0);
  CHECK(idempotent_power(z, 1) == 1);
  CHECK(idempotents(FiniteMonoid()) == std::vector<Element>{0});
  CHECK(idempotents(g) == std::vector<Element>{0});
  CHECK(idempotents(z) == std::vector<Element>{0, 1});
}

TEST_CASE("aperiodicity and groups") {
  CHECK_FALSE(is_aperiodic(z2()));
  CHECK(aperiodicity_witness(z2(), {0, 1}) == Element{1});
  CHECK(is_aperiodic(one_zero()));
  CHECK(is_aperiodic(FiniteMonoid()));
  CHECK(is_group(FiniteMonoid()));
  CHECK(is_group(z2()));
  CHECK_FALSE(is_group(one_zero()));
  CHECK_THROWS_AS(is_aperiodic(z2(), std::vector<Element>{1}), InputError);
  // {1} is closed; {g} is not.
  CHECK(is_closed(z2(), {0}));
  CHECK_FALSE(is_closed(z2(), {1}));
}

TEST_CASE("monoid construction checks") {
  CHECK_THROWS_AS(FiniteMonoid(2, 0, {0, 1, 1}), InputError);
  CHECK_THROWS_AS(FiniteMonoid(2, 0, {1, 1, 1, 1}), InputError);
  // Identity law holds but (x*x)*y != x*(x*y).
  CHECK_THROWS_AS(FiniteMonoid(3, 0, {0, 1, 2, 1, 2, 1, 2, 2, 2}, true), InputError);
}

TEST_CASE("product morphisms") {
  auto even = syntactic_morphism(compile("(aa)*", A1)).morphism;
  auto p = product_morphism(A1, {even, even});
  CHECK(p.morphism.monoid().size() == 2);
  for (const auto& t : p.tuples) CHECK(t[0] == t[1]);
  auto q = product_morphism(A1, {even, trivial_morphism(A1)});
  CHECK(q.morphism.monoid().size() == even.monoid().size());
  auto e = product_morphism(A1, {});
  CHECK(e.morphism.monoid().size() == 1);
}

TEST_CASE("syntactic morphism recognizes its language") {
  for (const char* re : {"(ab)*", "(aa+bb)*", "a*b(a+b)*", "~((a+b)*bb(a+b)*)", "(a(ab)*b)*"}) {
    auto d = compile(re, AB);
    auto l = syntactic_morphism(d);
    for (const auto& w : all_words(2, 8)) CHECK(l.contains(w) == d.accepts(w));
    CHECK(is_closed(l.morphism.monoid(), l.morphism.image()));
    for (Element s : l.morphism.image()) {
      Element e = idempotent_power(l.morphism.monoid(), s);
      CHECK(l.morphism.monoid().is_idempotent(e));
    }
  }
}

TEST_CASE("monoid size is independent of the presentation") {
  // Pairs of different regexes for the same language.
  std::vector<std::pair<const char*, const char*>> same = {
      {"(ab)*", "_+a(ba)*b"},
      {"(a+b)*a(a+b)*", "b*a(a+b)*"},
      {"(aa+bb)*", "((aa)*(bb)*)*"},
  };
  for (auto [x, y] : same) {
    auto mx = syntactic_morphism(compile(x, AB)).morphism.monoid();
    auto my = syntactic_morphism(compile(y, AB)).morphism.monoid();
    CHECK(mx.size() == my.size());
    CHECK(fingerprint(mx) == fingerprint(my));
  }
}

TEST_CASE("recognized_dfa inverts syntactic_morphism") {
  auto d = compile("(aa+bb)*", AB);
  auto l = syntactic_morphism(d);
  CHECK(isomorphic(recognized_dfa(l.morphism, l.accepting), d));
}

TEST_CASE("monoid cap") {
  Config cfg;
  cfg.monoid_cap = 4;
  CHECK_THROWS_AS(syntactic_morphism(compile("(ab)*", AB), cfg), ResourceError);
}
