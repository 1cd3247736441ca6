#include "sfc/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "sfc/lattice.hpp"

namespace sfc {

FinitePrevariety FinitePrevariety::st(const Alphabet& a) { return {trivial_morphism(a)}; }

FinitePrevariety FinitePrevariety::alphabet_testable(const Alphabet& a) {
  if (a.size() > 12) throw ResourceError("alphabet too large for the alphabet-testable morphism");
  const std::size_t n = std::size_t{1} << a.size();
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) table[x * n + y] = static_cast<Element>(x | y);
  std::vector<Element> letters;
  for (std::size_t i = 0; i < a.size(); ++i) letters.push_back(static_cast<Element>(1u << i));
  return {Morphism(a, std::make_shared<const FiniteMonoid>(n, 0, std::move(table)), std::move(letters))};
}

std::string to_string(GroupClass g) {
  switch (g) {
    case GroupClass::Mod: return "mod";
    case GroupClass::Amt: return "amt";
    case GroupClass::Gr: return "gr";
  }
  return "";
}

std::vector<std::pair<Element, Element>> PairSet::pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element s = 0; s < n_; ++s)
    for (Element t = 0; t < n_; ++t)
      if (contains(s, t)) out.emplace_back(s, t);
  return out;
}

std::size_t PairSet::size() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true)); }

PairSet c_pairs(const FinitePrevariety& c, const Morphism& alpha, const Config& cfg) {
  auto prod = product_morphism(alpha.alphabet(), {alpha, c.eta}, cfg);
  std::map<Element, std::vector<Element>> fibres;  // eta value -> alpha values
  for (const auto& t : prod.tuples) fibres[t[1]].push_back(t[0]);
  PairSet out(alpha.monoid().size());
  for (const auto& [n, ss] : fibres)
    for (Element s : ss)
      for (Element t : ss) out.insert(s, t);
  return out;
}

std::vector<Element> c_orbit(const PairSet& pairs, const Morphism& alpha, Element e) {
  const auto& m = alpha.monoid();
  if (e >= m.size() || !m.is_idempotent(e)) throw InputError("orbit requested for a non-idempotent element");
  std::set<Element> out;
  for (Element s = 0; s < m.size(); ++s)
    if (pairs.contains(e, s)) out.insert(m.mul(m.mul(e, s), e));
  return {out.begin(), out.end()};
}

namespace {

using Bits = std::vector<bool>;

Bits set_product(const FiniteMonoid& m, const Bits& x, const Bits& y) {
  Bits r(m.size());
  for (Element s = 0; s < m.size(); ++s)
    if (x[s])
      for (Element t = 0; t < m.size(); ++t)
        if (y[t]) r[m.mul(s, t)] = true;
  return r;
}

std::vector<Element> with_identity(const FiniteMonoid& m, const Bits& b) {
  std::vector<Element> out;
  for (Element s = 0; s < m.size(); ++s)
    if (b[s] || s == m.identity()) out.push_back(s);
  return out;
}

}  // namespace

ModKernel mod_kernel_with_index(const Morphism& alpha, const Config& cfg) {
  const auto& m = alpha.monoid();
  Bits p1(m.size());
  for (Element a : alpha.letters()) p1[a] = true;
  // P_n = alpha(A^n) is eventually periodic; find preperiod and period.
  std::map<Bits, std::size_t> seen;
  std::vector<Bits> seq{Bits{}, p1};
  const std::size_t cap = std::max<std::size_t>(cfg.round_cap, 1024);
  for (std::size_t n = 1;; ++n) {
    auto [it, fresh] = seen.emplace(seq[n], n);
    if (!fresh) {
      std::size_t pre = it->second, period = n - pre;
      std::size_t d = period;
      while (d < pre) d += period;
      while (seq.size() <= d) seq.push_back(set_product(m, seq.back(), p1));
      return {d, with_identity(m, seq[d])};
    }
    if (n > cap) throw ResourceError("stability index search exceeded " + std::to_string(cap) + " steps");
    seq.push_back(set_product(m, seq[n], p1));
  }
}

std::vector<Element> mod_kernel(const Morphism& alpha, const Config& cfg) {
  return mod_kernel_with_index(alpha, cfg).kernel;
}

std::vector<Element> gr_kernel(const Morphism& alpha) {
  const auto& m = alpha.monoid();
  const auto& img = alpha.image();
  std::vector<std::pair<Element, Element>> weak;
  for (Element s : img)
    for (Element t : img)
      if (m.mul(m.mul(s, t), s) == s) weak.emplace_back(s, t);
  Bits in(m.size());
  std::vector<Element> list{m.identity()};
  in[m.identity()] = true;
  auto push = [&](Element x) {
    if (!in[x]) {
      in[x] = true;
      list.push_back(x);
    }
  };
  // Worklist: each new element is multiplied with all known ones and
  // conjugated by every weak-inverse pair.
  for (std::size_t i = 0; i < list.size(); ++i) {
    Element x = list[i];
    for (std::size_t j = 0; j <= i; ++j) {
      push(m.mul(x, list[j]));
      push(m.mul(list[j], x));
    }
    for (auto [s, t] : weak) {
      push(m.mul(m.mul(s, x), t));
      push(m.mul(m.mul(t, x), s));
    }
  }
  std::sort(list.begin(), list.end());
  return list;
}

std::vector<Element> amt_kernel(const Morphism& alpha, const Config& cfg) {
  const auto& m = alpha.monoid();
  const std::size_t k = alpha.alphabet().size();
  const auto& img = alpha.image();
  if (k > cfg.amt_alphabet_cap)
    throw ResourceError("amt_kernel: alphabet size " + std::to_string(k) + " exceeds amt_alphabet_cap " +
                        std::to_string(cfg.amt_alphabet_cap) + " (use amt_kernel_modular for a bounded check)");
  if (img.size() > cfg.amt_monoid_cap)
    throw ResourceError("amt_kernel: monoid size " + std::to_string(img.size()) + " exceeds amt_monoid_cap " +
                        std::to_string(cfg.amt_monoid_cap) + " (use amt_kernel_modular for a bounded check)");
  using Vec = IntegerLattice::Vec;
  const std::size_t n = m.size();
  auto succ = [&](Element x, std::size_t a) { return m.mul(x, alpha.letter(static_cast<Symbol>(a))); };

  // Tarjan SCCs over the image.
  std::vector<int> comp(n, -1), low(n, 0), num(n, -1);
  std::vector<Element> stack;
  std::vector<bool> on(n);
  int counter = 0, ncomp = 0;
  std::function<void(Element)> dfs = [&](Element v) {
    num[v] = low[v] = counter++;
    stack.push_back(v);
    on[v] = true;
    for (std::size_t a = 0; a < k; ++a) {
      Element w = succ(v, a);
      if (num[w] < 0) {
        dfs(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on[w]) {
        low[v] = std::min(low[v], num[w]);
      }
    }
    if (low[v] == num[v]) {
      for (;;) {
        Element w = stack.back();
        stack.pop_back();
        on[w] = false;
        comp[w] = ncomp;
        if (w == v) break;
      }
      ++ncomp;
    }
  };
  dfs(m.identity());

  // Potentials from a BFS tree inside each SCC and the cycle lattice of each SCC.
  std::vector<Vec> phi(n, Vec(k, 0));
  std::vector<bool> placed(n);
  std::vector<IntegerLattice> cycles(static_cast<std::size_t>(ncomp), IntegerLattice(k));
  std::vector<std::vector<Element>> members(static_cast<std::size_t>(ncomp));
  for (Element v : img) members[static_cast<std::size_t>(comp[v])].push_back(v);
  for (auto& mem : members) {
    std::vector<Element> queue{mem.front()};
    placed[mem.front()] = true;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (std::size_t a = 0; a < k; ++a) {
        Element w = succ(queue[i], a);
        if (comp[w] != comp[queue[i]] || placed[w]) continue;
        placed[w] = true;
        phi[w] = phi[queue[i]];
        phi[w][a] += 1;
        queue.push_back(w);
      }
    for (Element x : mem)
      for (std::size_t a = 0; a < k; ++a) {
        Element y = succ(x, a);
        if (comp[y] != comp[x]) continue;
        Vec g = phi[x];
        g[a] += 1;
        for (std::size_t i = 0; i < k; ++i) g[i] -= phi[y][i];
        cycles[static_cast<std::size_t>(comp[x])].add(std::move(g));
      }
  }

  // Enumerate chains of SCCs from SCC(1), one crossing edge per step.
  Bits kernel(n);
  std::size_t chains = 0;
  const std::size_t chain_cap = 1000000;
  std::function<void(Element, const Vec&, const IntegerLattice&)> walk = [&](Element entry, const Vec& acc,
                                                                               const IntegerLattice& lat) {
    if (++chains > chain_cap) throw ResourceError("amt_kernel: too many SCC chains");
    const auto c = static_cast<std::size_t>(comp[entry]);
    for (Element s : members[c]) {
      if (kernel[s]) continue;
      Vec total = acc;
      for (std::size_t i = 0; i < k; ++i) total[i] += phi[s][i] - phi[entry][i];
      if (lat.contains(total)) kernel[s] = true;
    }
    for (Element x : members[c])
      for (std::size_t a = 0; a < k; ++a) {
        Element y = succ(x, a);
        if (static_cast<std::size_t>(comp[y]) == c) continue;
        Vec next = acc;
        for (std::size_t i = 0; i < k; ++i) next[i] += phi[x][i] - phi[entry][i];
        next[a] += 1;
        IntegerLattice l2 = lat;
        l2.add(cycles[static_cast<std::size_t>(comp[y])]);
        walk(y, next, l2);
      }
  };
  walk(m.identity(), Vec(k, 0), cycles[static_cast<std::size_t>(comp[m.identity()])]);
  return with_identity(m, kernel);
}

std::vector<Element> amt_kernel_modular(const Morphism& alpha, std::size_t q) {
  const auto& m = alpha.monoid();
  const std::size_t k = alpha.alphabet().size();
  std::size_t codes = 1;
  for (std::size_t i = 0; i < k; ++i) codes *= q;
  // State: element * codes + mixed-radix letter counts mod q.
  Bits seen(m.size() * codes);
  std::vector<std::size_t> queue{m.identity() * codes};
  seen[queue[0]] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Element x = static_cast<Element>(queue[i] / codes);
    std::size_t code = queue[i] % codes;
    std::size_t radix = 1;
    for (std::size_t a = 0; a < k; ++a, radix *= q) {
      std::size_t digit = (code / radix) % q;
      std::size_t ncode = code - digit * radix + ((digit + 1) % q) * radix;
      std::size_t s = m.mul(x, alpha.letter(static_cast<Symbol>(a))) * codes + ncode;
      if (!seen[s]) {
        seen[s] = true;
        queue.push_back(s);
      }
    }
  }
  std::vector<Element> out;
  for (Element x = 0; x < m.size(); ++x)
    if (seen[x * codes]) out.push_back(x);
  return out;
}

std::vector<Element> group_kernel(GroupClass g, const Morphism& alpha, const Config& cfg) {
  switch (g) {
    case GroupClass::Mod: return mod_kernel(alpha, cfg);
    case GroupClass::Amt: return amt_kernel(alpha, cfg);
    case GroupClass::Gr: return gr_kernel(alpha);
  }
  return {};
}

bool in_base_class(const ClassSelector& c, const Dfa& d, const Config& cfg) {
  auto l = syntactic_morphism(d, cfg);
  const auto& m = l.morphism.monoid();
  if (const auto* fp = std::get_if<FinitePrevariety>(&c)) {
    auto prod = product_morphism(d.alphabet(), {l.morphism, fp->eta}, cfg);
    std::map<Element, bool> verdict;
    for (const auto& t : prod.tuples) {
      auto [it, fresh] = verdict.emplace(t[1], l.accepting[t[0]]);
      if (!fresh && it->second != l.accepting[t[0]]) return false;
    }
    return true;
  }
  if (!is_group(m)) return false;
  switch (std::get<GroupClass>(c)) {
    case GroupClass::Gr: return true;
    case GroupClass::Amt:
      for (Element x = 0; x < m.size(); ++x)
        for (Element y = 0; y < m.size(); ++y)
          if (m.mul(x, y) != m.mul(y, x)) return false;
      return true;
    case GroupClass::Mod: {
      const auto& ls = l.morphism.letters();
      return std::all_of(ls.begin(), ls.end(), [&](Element x) { return x == ls.front(); });
    }
  }
  return false;
}

}  // namespace sfc
