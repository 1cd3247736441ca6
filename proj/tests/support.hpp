#pragma once

#include <random>
#include <set>

#include "sfc/monoid.hpp"
#include "sfc/sd.hpp"

namespace sfc::testing {

inline const Alphabet& ab() {
  static const Alphabet a("ab");
  return a;
}

// Permutations of {0,1,2} composed left to right; element 0 is the identity.
// a = (12), b = (123); the even permutations are {0, 3, 4}.
inline Morphism s3_morphism() {
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto index = [&](int x, int y, int z) {
    for (Element i = 0; i < 6; ++i)
      if (perms[i][0] == x && perms[i][1] == y && perms[i][2] == z) return i;
    return Element{0};
  };
  std::vector<Element> table(36);
  for (Element i = 0; i < 6; ++i)
    for (Element j = 0; j < 6; ++j) {
      const int* p = perms[i];
      const int* q = perms[j];
      table[i * 6 + j] = index(q[p[0]], q[p[1]], q[p[2]]);
    }
  auto m = std::make_shared<const FiniteMonoid>(6, 0, std::move(table), true);
  return Morphism(ab(), m, {index(1, 0, 2), index(1, 2, 0)});
}

inline const std::vector<Element>& a3() {
  static const std::vector<Element> v{0, 3, 4};
  return v;
}

// {1, a, b, 0} with all products of two letters equal to 0.
inline Morphism at_example_morphism() {
  std::vector<Element> t = {0, 1, 2, 3, 1, 3, 3, 3, 2, 3, 3, 3, 3, 3, 3, 3};
  return Morphism(ab(), std::make_shared<const FiniteMonoid>(4, 0, std::move(t), true), {1, 2});
}

// Z/2 counting a's.
inline Morphism parity_a_morphism() {
  return Morphism(ab(), std::make_shared<const FiniteMonoid>(2, 0, std::vector<Element>{0, 1, 1, 0}), {1, 0});
}

// {1, z} with z absorbing; a -> z, b -> 1.
inline Morphism one_zero_morphism() {
  return Morphism(ab(), std::make_shared<const FiniteMonoid>(2, 0, std::vector<Element>{0, 1, 1, 1}), {1, 0});
}

// Distinct minimal complete DFAs over {a,b} with at most max_states states
// whose syntactic monoid has at most max_monoid elements. Deterministic.
inline std::vector<Dfa> dfa_corpus(std::size_t count = 220, std::size_t max_states = 6, std::size_t max_monoid = 12) {
  std::mt19937 rng(20240601);
  std::vector<Dfa> out;
  std::set<std::pair<std::vector<State>, std::vector<bool>>> seen;
  for (int attempt = 0; out.size() < count && attempt < 200000; ++attempt) {
    std::size_t n = 1 + rng() % max_states;
    std::vector<bool> fin(n);
    std::vector<State> delta(2 * n);
    for (std::size_t q = 0; q < n; ++q) fin[q] = rng() % 2;
    for (auto& t : delta) t = static_cast<State>(rng() % n);
    Dfa d = minimize(Dfa(ab(), n, 0, fin, delta));
    if (!seen.insert({d.delta(), d.finals()}).second) continue;
    try {
      Config cfg;
      cfg.monoid_cap = max_monoid;
      syntactic_morphism(d, cfg);
    } catch (const std::exception&) {
      continue;
    }
    out.push_back(std::move(d));
  }
  return out;
}

// Prefix codes over {a,b}: finite ones from random words, and infinite
// ones of the form X*Y for random finite X, Y when that is a prefix code.
inline std::vector<Dfa> random_prefix_codes(std::size_t count, unsigned seed = 99) {
  std::mt19937 rng(seed);
  std::vector<Dfa> out;
  auto random_words = [&](std::size_t n, std::size_t maxlen) {
    std::string re;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t len = 1 + rng() % maxlen;
      if (!re.empty()) re += "+";
      for (std::size_t j = 0; j < len; ++j) re += "ab"[rng() % 2];
    }
    return re;
  };
  for (int attempt = 0; out.size() < count && attempt < 100000; ++attempt) {
    std::string re = attempt % 2 ? random_words(1 + rng() % 4, 4)
                                 : "(" + random_words(1 + rng() % 3, 3) + ")*(" + random_words(1 + rng() % 2, 3) + ")";
    Dfa k = compile(re, ab());
    if (is_prefix_code(k)) out.push_back(std::move(k));
  }
  return out;
}

// Exhaustive search for (u, v, w) with |uvw| <= maxlen, uvw in K+, v in K^d, uv not in K+.
inline bool brute_delay_witness(const Dfa& k, std::size_t d, std::size_t maxlen) {
  Dfa kp = plus(k), kd = power(k, d);
  for (const auto& x : all_words(2, maxlen)) {
    if (!kp.accepts(x)) continue;
    std::vector<bool> prefix_in(x.size() + 1);
    State q = kp.initial();
    prefix_in[0] = kp.is_final(q);
    for (std::size_t i = 0; i < x.size(); ++i) prefix_in[i + 1] = kp.is_final(q = kp.next(q, x[i]));
    for (std::size_t i = 0; i <= x.size(); ++i) {
      State r = kd.initial();
      for (std::size_t j = i;; ++j) {
        if (kd.is_final(r) && !prefix_in[j]) return true;
        if (j == x.size()) break;
        r = kd.next(r, x[j]);
      }
    }
  }
  return false;
}

}  // namespace sfc::testing
