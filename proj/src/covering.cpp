#include "sfc/covering.hpp"

#include <algorithm>
#include <set>

namespace sfc {

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<Element, Value>& p) const noexcept {
    return std::hash<Value>()(p.second) * 31 + p.first;
  }
};

// Maxima of a set of values.
std::vector<Value> maxima_of(const IdempotentSemiring& r, std::vector<Value> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Value> out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < xs.size() && !dominated; ++j) dominated = j != i && r.leq(xs[i], xs[j]);
    if (!dominated) out.push_back(xs[i]);
  }
  return out;
}

void check_rounds(std::size_t rounds, const Config& cfg) {
  if (rounds > cfg.round_cap) throw ResourceError("saturation exceeded round_cap " + std::to_string(cfg.round_cap));
}

// Semi-naive closure of a downset under multiplication and, if sf, SF-closure.
// Newly added maxima are reported to `added`.
template <class OnAdd>
void close_multiplicative(DownSet& s, std::vector<Value> delta, bool sf, OnAdd&& added) {
  const auto& r = s.semiring();
  while (!delta.empty()) {
    std::vector<Value> cands = products(r, delta, s.maxima());
    auto more = products(r, s.maxima(), delta);
    cands.insert(cands.end(), more.begin(), more.end());
    if (sf)
      for (Value x : delta) cands.push_back(r.sf_closure(x));
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    std::vector<Value> fresh;
    for (Value x : cands)
      if (s.insert(x)) fresh.push_back(x);
    delta.clear();
    for (Value x : fresh)
      if (std::binary_search(s.maxima().begin(), s.maxima().end(), x)) {
        delta.push_back(x);
        added(x);
      }
  }
}

}  // namespace

bool CoverInstance::in_bad_set(Value x) const {
  for (std::size_t i = 0; i < accepting.size(); ++i)
    if ((rho.semiring.field(x, i) & accepting[i]) == 0) return false;
  return true;
}

bool CoverInstance::bad_set_empty() const {
  return std::any_of(accepting.begin(), accepting.end(), [](std::uint64_t m) { return m == 0; });
}

CoverInstance reduce_cover_instance(const Dfa& l0, const std::vector<Dfa>& ls, const Config& cfg) {
  if (ls.empty()) throw InputError("covering needs at least one language to cover with");
  std::vector<RatingMap> maps;
  CoverInstance ci;
  auto add = [&](const Dfa& d) {
    if (!(d.alphabet() == l0.alphabet())) throw InputError("covering: alphabet mismatch");
    auto l = syntactic_morphism(d, cfg);
    maps.push_back(rho_alpha(l.morphism, cfg));
    std::uint64_t mask = 0;
    for (Element x : l.accepting_set()) mask |= 1ull << x;
    ci.accepting.push_back(mask);
  };
  add(l0);
  for (const auto& d : ls) add(d);
  ci.rho = product_rating_map(maps);
  return ci;
}

bool PointedSaturation::contains(Element n, Value r) const {
  auto it = elements.find(n);
  return it != elements.end() && it->second.contains(r);
}

PointedSaturation saturate_finite(const FinitePrevariety& c, const RatingMap& rho, const Config& cfg) {
  if (!(c.eta.alphabet() == rho.alphabet)) throw InputError("saturate_finite: alphabet mismatch");
  const auto& r = rho.semiring;
  const auto& nm = c.eta.monoid();
  PointedSaturation out;
  auto slot = [&](Element n) -> DownSet& { return out.elements.try_emplace(n, r).first->second; };
  auto record = [&](const char* rule, Element n, Value v) {
    if (cfg.trace) out.trace.push_back({out.rounds, rule, n, v});
  };

  // Trivial elements: the submonoid generated by (eta(a), rho(a)).
  using P = std::pair<Element, Value>;
  std::vector<P> gens;
  for (std::size_t a = 0; a < rho.letters.size(); ++a)
    gens.emplace_back(c.eta.letter(static_cast<Symbol>(a)), rho.letters[a]);
  auto mul = [&](const P& x, const P& y) { return P{nm.mul(x.first, y.first), r.mul(x.second, y.second)}; };
  auto seed = close_generators<P, PairHash>(P{nm.identity(), r.one()}, gens, mul, cfg.monoid_cap * 64,
                                            "trivial elements");
  std::sort(seed.elements.begin(), seed.elements.end());
  std::map<Element, std::vector<Value>> delta;
  for (const auto& [n, v] : seed.elements) slot(n).insert(v);
  for (auto& [n, ds] : out.elements) {
    delta[n] = ds.maxima();
    for (Value v : ds.maxima()) record("trivial", n, v);
  }

  while (!delta.empty()) {
    ++out.rounds;
    check_rounds(out.rounds, cfg);
    std::map<Element, std::vector<Value>> cands;
    for (const auto& [n1, d1] : delta)
      for (const auto& [n2, s2] : out.elements) {
        auto a = products(r, d1, s2.maxima());
        auto& ca = cands[nm.mul(n1, n2)];
        ca.insert(ca.end(), a.begin(), a.end());
        auto b = products(r, s2.maxima(), d1);
        auto& cb = cands[nm.mul(n2, n1)];
        cb.insert(cb.end(), b.begin(), b.end());
      }
    std::map<Element, std::vector<Value>> sf;
    for (const auto& [n, d1] : delta)
      if (nm.is_idempotent(n))
        for (Value v : d1) sf[n].push_back(r.sf_closure(v));
    std::map<Element, std::vector<Value>> fresh;
    auto absorb = [&](std::map<Element, std::vector<Value>>& src, const char* rule) {
      for (auto& [n, vs] : src) {
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        auto& ds = slot(n);
        for (Value v : vs)
          if (ds.insert(v)) {
            fresh[n].push_back(v);
            record(rule, n, v);
          }
      }
    };
    absorb(cands, "multiplication");
    absorb(sf, "sf-closure");
    delta.clear();
    for (auto& [n, vs] : fresh) {
      const auto& mx = out.elements.at(n).maxima();
      for (Value v : vs)
        if (std::binary_search(mx.begin(), mx.end(), v)) delta[n].push_back(v);
    }
  }
  return out;
}

DownSet opt_finite(const FinitePrevariety& c, const RatingMap& rho, const Config& cfg) {
  auto sat = saturate_finite(c, rho, cfg);
  DownSet out(rho.semiring);
  for (const auto& [n, ds] : sat.elements) out.insert_all(ds.maxima());
  return out;
}

std::vector<Value> g_operation(GroupClass g, const RatingMap& rho, const DownSet& s, const Config& cfg) {
  const auto& r = rho.semiring;
  using Anti = std::vector<Value>;
  std::vector<Anti> letters;
  for (Value a : rho.letters) {
    auto left = products(r, s.maxima(), {a});
    letters.push_back(maxima_of(r, products(r, left, s.maxima())));
  }
  auto mul = [&r](const Anti& x, const Anti& y) { return maxima_of(r, products(r, x, y)); };
  Closure<Anti> c;
  try {
    c = close_generators<Anti, VectorHash>(Anti{r.one()}, letters, mul, cfg.powerset2_cap,
                                           "monoid generated by the G-operation letter images");
  } catch (const ResourceError& e) {
    throw ResourceError(std::string(e.what()) + " (powerset2_cap)");
  }
  auto mu = closure_morphism(rho.alphabet, c.cayley);
  std::vector<Value> out;
  for (Element x : group_kernel(g, mu, cfg)) out.insert(out.end(), c.elements[x].begin(), c.elements[x].end());
  return maxima_of(r, std::move(out));
}

CompleteSaturation saturate_group(GroupClass g, const RatingMap& rho, const Config& cfg) {
  const auto& r = rho.semiring;
  CompleteSaturation out{DownSet(r), 0, {}};
  auto record = [&](const char* rule, Value v) {
    if (cfg.trace) out.trace.push_back({out.rounds, rule, std::nullopt, v});
  };
  for (;;) {
    ++out.rounds;
    check_rounds(out.rounds, cfg);
    std::vector<Value> delta;
    for (Value v : g_operation(g, rho, out.elements, cfg))
      if (out.elements.insert(v)) delta.push_back(v);
    std::erase_if(delta, [&](Value v) {
      return !std::binary_search(out.elements.maxima().begin(), out.elements.maxima().end(), v);
    });
    if (delta.empty()) break;
    for (Value v : delta) record("g-operation", v);
    close_multiplicative(out.elements, delta, true, [&](Value v) { record("multiplication/sf-closure", v); });
  }
  return out;
}

DownSet opt_group(GroupClass g, const RatingMap& rho, const Config& cfg) {
  auto sat = saturate_group(g, rho, cfg);
  DownSet out = sat.elements;
  std::vector<Value> seed = rho.letters;
  seed.push_back(rho.semiring.one());
  out.insert_all(seed);
  close_multiplicative(out, out.maxima(), false, [](Value) {});
  return out;
}

bool is_pointed_closed(const FinitePrevariety& c, const RatingMap& rho, const PointedSaturation& s,
                       const Config& cfg) {
  const auto& r = rho.semiring;
  const auto& nm = c.eta.monoid();
  for (const auto& [n1, d1] : s.elements) {
    for (const auto& [n2, d2] : s.elements)
      for (Value x : d1.maxima())
        for (Value y : d2.maxima())
          if (!s.contains(nm.mul(n1, n2), r.mul(x, y))) return false;
    if (nm.is_idempotent(n1))
      for (Value x : d1.maxima())
        if (!s.contains(n1, r.sf_closure(x))) return false;
  }
  // Trivial elements.
  std::vector<std::pair<Element, Value>> frontier{{nm.identity(), r.one()}};
  std::set<std::pair<Element, Value>> seen(frontier.begin(), frontier.end());
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    auto [n, v] = frontier[i];
    if (!s.contains(n, v)) return false;
    for (std::size_t a = 0; a < rho.letters.size(); ++a) {
      std::pair<Element, Value> nx{nm.mul(n, c.eta.letter(static_cast<Symbol>(a))), r.mul(v, rho.letters[a])};
      if (seen.insert(nx).second) {
        if (seen.size() > cfg.monoid_cap * 64) throw ResourceError("too many trivial elements");
        frontier.push_back(nx);
      }
    }
  }
  return true;
}

bool is_complete_closed(GroupClass g, const RatingMap& rho, const DownSet& s, const Config& cfg) {
  const auto& r = rho.semiring;
  for (Value x : s.maxima()) {
    if (!s.contains(r.sf_closure(x))) return false;
    for (Value y : s.maxima())
      if (!s.contains(r.mul(x, y))) return false;
  }
  for (Value v : g_operation(g, rho, s, cfg))
    if (!s.contains(v)) return false;
  return true;
}

CoverResult is_coverable(const ClassSelector& c, const Dfa& l0, const std::vector<Dfa>& ls, const Config& cfg) {
  auto ci = reduce_cover_instance(l0, ls, cfg);
  CoverResult out;
  if (const auto* fp = std::get_if<FinitePrevariety>(&c)) {
    auto sat = saturate_finite(*fp, ci.rho, cfg);
    out.opt = DownSet(ci.rho.semiring);
    for (const auto& [n, ds] : sat.elements) out.opt.insert_all(ds.maxima());
    out.rounds = sat.rounds;
    out.trace = std::move(sat.trace);
  } else {
    GroupClass g = std::get<GroupClass>(c);
    auto sat = saturate_group(g, ci.rho, cfg);
    out.rounds = sat.rounds;
    out.trace = std::move(sat.trace);
    out.opt = sat.elements;
    std::vector<Value> seed = ci.rho.letters;
    seed.push_back(ci.rho.semiring.one());
    out.opt.insert_all(seed);
    close_multiplicative(out.opt, out.opt.maxima(), false, [&](Value v) {
      if (cfg.trace) out.trace.push_back({out.rounds, "opt-closure", std::nullopt, v});
    });
  }
  out.answer = std::none_of(out.opt.maxima().begin(), out.opt.maxima().end(),
                            [&](Value v) { return ci.in_bad_set(v); });
  return out;
}

CoverResult is_separable(const ClassSelector& c, const Dfa& l1, const Dfa& l2, const Config& cfg) {
  return is_coverable(c, l1, {l2}, cfg);
}

}  // namespace sfc
