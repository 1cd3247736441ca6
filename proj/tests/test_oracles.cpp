#include <doctest.h>

#include <algorithm>

#include "sfc/error.hpp"
#include "sfc/lattice.hpp"
#include "sfc/oracles.hpp"
#include "support.hpp"

using namespace sfc;
using namespace sfc::testing;

namespace {

const Alphabet A1("a");

bool subset(const std::vector<Element>& x, const std::vector<Element>& y) {
  return std::includes(y.begin(), y.end(), x.begin(), x.end());
}

// alpha(A^n) by iteration.
std::vector<std::vector<bool>> layers(const Morphism& alpha, std::size_t upto) {
  const auto& m = alpha.monoid();
  std::vector<std::vector<bool>> out;
  std::vector<bool> cur(m.size());
  cur[m.identity()] = true;
  out.push_back(cur);
  for (std::size_t n = 1; n <= upto; ++n) {
    std::vector<bool> next(m.size());
    for (Element s = 0; s < m.size(); ++s)
      if (cur[s])
        for (Element l : alpha.letters()) next[m.mul(s, l)] = true;
    out.push_back(next);
    cur = next;
  }
  return out;
}

}  // namespace

TEST_CASE("C-pairs: alphabet testable example") {
  auto alpha = at_example_morphism();
  auto at = FinitePrevariety::alphabet_testable(ab());
  auto p = c_pairs(at, alpha);
  // Elements: 0 = 1, 1 = a, 2 = b, 3 = zero.
  CHECK(p.contains(1, 3));
  CHECK(p.contains(3, 2));
  CHECK_FALSE(p.contains(1, 2));
  CHECK(c_orbit(p, alpha, 3) == std::vector<Element>{3});
}

TEST_CASE("C-pairs: ST and eta itself") {
  auto alpha = syntactic_morphism(compile("(ab)*", ab())).morphism;
  auto p = c_pairs(FinitePrevariety::st(ab()), alpha);
  CHECK(p.size() == alpha.image().size() * alpha.image().size());
  CHECK(c_orbit(p, alpha, alpha.monoid().identity()) == alpha.image());

  auto z = one_zero_morphism();
  auto pz = c_pairs(FinitePrevariety::st(ab()), z);
  CHECK(c_orbit(pz, z, 1) == std::vector<Element>{1});

  auto at = FinitePrevariety::alphabet_testable(ab());
  auto self = c_pairs(at, at.eta);
  CHECK(self.size() == at.eta.image().size());
  for (Element s : at.eta.image()) CHECK(self.contains(s, s));

  CHECK_THROWS_AS(c_orbit(p, alpha, alpha.letter(0)), InputError);
}

TEST_CASE("C-pairs are closed under multiplication") {
  auto corpus = dfa_corpus(40);
  for (const auto& d : corpus) {
    auto alpha = syntactic_morphism(d).morphism;
    const auto& m = alpha.monoid();
    for (const auto& c : {FinitePrevariety::st(ab()), FinitePrevariety::alphabet_testable(ab())}) {
      auto p = c_pairs(c, alpha);
      auto ps = p.pairs();
      for (auto [s1, t1] : ps)
        for (auto [s2, t2] : ps) CHECK(p.contains(m.mul(s1, s2), m.mul(t1, t2)));
    }
  }
}

TEST_CASE("MOD kernel examples") {
  auto even = syntactic_morphism(compile("(aa)*", A1)).morphism;
  auto mk = mod_kernel_with_index(even);
  CHECK(mk.stability_index == 2);
  CHECK(mk.kernel == std::vector<Element>{even.monoid().identity()});

  auto z = one_zero_morphism();
  auto mz = mod_kernel_with_index(z);
  CHECK(mz.stability_index == 1);
  CHECK(mz.kernel == std::vector<Element>{0, 1});

  CHECK(mod_kernel(trivial_morphism(ab())) == std::vector<Element>{0});
}

TEST_CASE("AMT kernel examples") {
  CHECK(amt_kernel(parity_a_morphism()) == std::vector<Element>{0});
  CHECK(amt_kernel(s3_morphism()) == a3());
  CHECK(amt_kernel(trivial_morphism(ab())) == std::vector<Element>{0});
  for (std::size_t q = 1; q <= 12; ++q) CHECK(subset(amt_kernel(s3_morphism()), amt_kernel_modular(s3_morphism(), q)));
  Config small;
  small.amt_monoid_cap = 4;
  CHECK_THROWS_AS(amt_kernel(s3_morphism(), small), ResourceError);
}

TEST_CASE("GR kernel examples") {
  CHECK(gr_kernel(s3_morphism()) == std::vector<Element>{0});
  CHECK(gr_kernel(parity_a_morphism()) == std::vector<Element>{0});
  CHECK(gr_kernel(one_zero_morphism()) == std::vector<Element>{0, 1});
  CHECK(gr_kernel(trivial_morphism(ab())) == std::vector<Element>{0});
  CHECK(group_kernel(GroupClass::Amt, trivial_morphism(ab())) == std::vector<Element>{0});
}

TEST_CASE("kernel inclusions on the corpus") {
  auto corpus = dfa_corpus(120);
  Config cfg;
  std::size_t amt_checked = 0;
  for (const auto& d : corpus) {
    auto alpha = syntactic_morphism(d).morphism;
    auto mod = mod_kernel(alpha), gr = gr_kernel(alpha);
    Element one = alpha.monoid().identity();
    for (const auto* k : {&mod, &gr}) {
      CHECK(std::binary_search(k->begin(), k->end(), one));
      CHECK(is_closed(alpha.monoid(), *k));
    }
    CHECK(subset(gr, mod));
    if (alpha.monoid().size() <= cfg.amt_monoid_cap) {
      auto amt = amt_kernel(alpha, cfg);
      CHECK(subset(gr, amt));
      CHECK(subset(amt, mod));
      ++amt_checked;
    }
  }
  CHECK(amt_checked > 20);
}

TEST_CASE("MOD stability index matches brute force") {
  for (const auto& d : dfa_corpus(60)) {
    auto alpha = syntactic_morphism(d).morphism;
    auto mk = mod_kernel_with_index(alpha);
    std::size_t dd = mk.stability_index;
    auto ls = layers(alpha, 4 * dd);
    // alpha(A^d) = union of alpha(A^n), n multiple of d, d <= n <= 4d.
    std::vector<bool> uni(alpha.monoid().size());
    for (std::size_t n = dd; n <= 4 * dd; n += dd)
      for (Element s = 0; s < uni.size(); ++s) uni[s] = uni[s] || ls[n][s];
    CHECK(uni == ls[dd]);
    CHECK(ls[2 * dd] == ls[dd]);
  }
}

TEST_CASE("integer lattice") {
  IntegerLattice l(2);
  l.add({2, 0});
  l.add({1, 3});
  CHECK(l.rank() == 2);
  CHECK(l.contains({3, 3}));
  CHECK(l.contains({0, 6}));
  CHECK_FALSE(l.contains({0, 3}));
  CHECK_FALSE(l.contains({1, 0}));
  IntegerLattice m(2);
  m.add({0, 3});
  l.add(m);
  CHECK(l.contains({1, 0}));
}

TEST_CASE("base class membership") {
  auto even = compile("((a+b)(a+b))*", ab());
  CHECK(in_base_class(GroupClass::Mod, even));
  CHECK_FALSE(in_base_class(GroupClass::Mod, compile("(b+ab*a)*", ab())));
  CHECK(in_base_class(GroupClass::Amt, compile("(b+ab*a)*", ab())));
  CHECK_FALSE(in_base_class(GroupClass::Gr, compile("a*", ab())));
  CHECK(in_base_class(FinitePrevariety::st(ab()), compile("(a+b)*", ab())));
  CHECK_FALSE(in_base_class(FinitePrevariety::st(ab()), compile("a", ab())));
  CHECK(in_base_class(FinitePrevariety::alphabet_testable(ab()), compile("(a+b)*a(a+b)*", ab())));
}
