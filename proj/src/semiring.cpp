#include "sfc/semiring.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace sfc {

struct IdempotentSemiring::Impl {
  struct Comp {
    bool pow = false;
    Table tab;
    std::shared_ptr<const FiniteMonoid> mon;
    unsigned offset = 0, width = 0;
    std::uint64_t mask = 0;
    // Powerset product by bytes: lb[(i * nbytes + b) * 256 + byte] is the set
    // {i * j : j in byte b of the right operand}.
    std::size_t nbytes = 0;
    std::vector<std::uint64_t> lb;
  };
  std::vector<Comp> comps;
  bool all_pow = true;
  Value zero = 0, one = 0;

  void finish() {
    unsigned off = 0;
    all_pow = true;
    zero = one = 0;
    for (auto& c : comps) {
      c.offset = off;
      if (c.width > 64 || off + c.width > 64)
        throw ResourceError("semiring elements need more than 64 bits");
      off += c.width;
      c.mask = c.width == 64 ? ~0ull : ((1ull << c.width) - 1);
      if (c.pow) {
        zero |= 0;
        one |= (1ull << c.mon->identity()) << c.offset;
      } else {
        all_pow = false;
        zero |= std::uint64_t{c.tab.zero} << c.offset;
        one |= std::uint64_t{c.tab.one} << c.offset;
      }
    }
  }
};

namespace {

unsigned bits_for(std::size_t n) { return n <= 1 ? 1u : static_cast<unsigned>(std::bit_width(n - 1)); }

std::uint64_t pow_mul(const IdempotentSemiring::Impl::Comp& c, std::uint64_t x, std::uint64_t y) {
  std::uint64_t r = 0;
  while (x) {
    unsigned i = static_cast<unsigned>(std::countr_zero(x));
    x &= x - 1;
    const std::uint64_t* row = c.lb.data() + i * c.nbytes * 256;
    std::uint64_t yy = y;
    for (std::size_t b = 0; yy; ++b, yy >>= 8) r |= row[b * 256 + (yy & 0xff)];
  }
  return r;
}

}  // namespace

IdempotentSemiring::IdempotentSemiring() {
  Table t;
  t.size = 2;
  t.add = {0, 1, 1, 1};
  t.mul = {0, 0, 0, 1};
  t.zero = 0;
  t.one = 1;
  *this = table(std::move(t));
}

IdempotentSemiring IdempotentSemiring::table(Table t) {
  if (t.size == 0) throw InputError("semiring must be nonempty");
  if (t.add.size() != t.size * t.size || t.mul.size() != t.size * t.size)
    throw InputError("semiring tables must be size x size");
  for (auto v : t.add)
    if (v >= t.size) throw InputError("semiring add entry out of range");
  for (auto v : t.mul)
    if (v >= t.size) throw InputError("semiring mul entry out of range");
  if (t.zero >= t.size || t.one >= t.size) throw InputError("semiring zero/one out of range");
  auto impl = std::make_shared<Impl>();
  Impl::Comp c;
  c.width = bits_for(t.size);
  c.tab = std::move(t);
  impl->comps.push_back(std::move(c));
  impl->finish();
  return IdempotentSemiring(std::move(impl));
}

IdempotentSemiring IdempotentSemiring::powerset(std::shared_ptr<const FiniteMonoid> m) {
  if (m->size() > 64) throw ResourceError("powerset semiring over more than 64 elements");
  auto impl = std::make_shared<Impl>();
  Impl::Comp c;
  c.pow = true;
  c.width = static_cast<unsigned>(m->size());
  c.nbytes = (m->size() + 7) / 8;
  c.lb.assign(m->size() * c.nbytes * 256, 0);
  for (Element i = 0; i < m->size(); ++i)
    for (std::size_t b = 0; b < c.nbytes; ++b)
      for (unsigned byte = 0; byte < 256; ++byte) {
        std::uint64_t s = 0;
        for (unsigned j = 0; j < 8; ++j) {
          Element e = static_cast<Element>(b * 8 + j);
          if ((byte >> j & 1) && e < m->size()) s |= 1ull << m->mul(i, e);
        }
        c.lb[(i * c.nbytes + b) * 256 + byte] = s;
      }
  c.mon = std::move(m);
  impl->comps.push_back(std::move(c));
  impl->finish();
  return IdempotentSemiring(std::move(impl));
}

IdempotentSemiring IdempotentSemiring::product(const std::vector<IdempotentSemiring>& parts) {
  auto impl = std::make_shared<Impl>();
  for (const auto& p : parts)
    for (const auto& c : p.impl_->comps) impl->comps.push_back(c);
  if (impl->comps.empty()) {
    // The one-element semiring.
    Impl::Comp c;
    c.tab.size = 1;
    c.tab.add = {0};
    c.tab.mul = {0};
    c.width = 1;
    impl->comps.push_back(std::move(c));
  }
  impl->finish();
  return IdempotentSemiring(std::move(impl));
}

Value IdempotentSemiring::add(Value x, Value y) const {
  const auto& im = *impl_;
  if (im.all_pow) return x | y;
  Value r = 0;
  for (const auto& c : im.comps) {
    std::uint64_t a = (x >> c.offset) & c.mask, b = (y >> c.offset) & c.mask;
    std::uint64_t v = c.pow ? (a | b) : c.tab.add[a * c.tab.size + b];
    r |= v << c.offset;
  }
  return r;
}

Value IdempotentSemiring::mul(Value x, Value y) const {
  Value r = 0;
  for (const auto& c : impl_->comps) {
    std::uint64_t a = (x >> c.offset) & c.mask, b = (y >> c.offset) & c.mask;
    std::uint64_t v = c.pow ? pow_mul(c, a, b) : c.tab.mul[a * c.tab.size + b];
    r |= v << c.offset;
  }
  return r;
}

Value IdempotentSemiring::zero() const noexcept { return impl_->zero; }
Value IdempotentSemiring::one() const noexcept { return impl_->one; }

Value IdempotentSemiring::omega(Value x) const {
  Value p = x;
  for (;;) {
    Value sq = mul(p, p);
    if (sq == p) return p;
    p = mul(p, x);
  }
}

Value IdempotentSemiring::sf_closure(Value x) const {
  Value w = omega(x);
  return add(w, mul(w, x));
}

std::size_t IdempotentSemiring::components() const { return impl_->comps.size(); }
bool IdempotentSemiring::is_powerset(std::size_t c) const { return impl_->comps.at(c).pow; }
const FiniteMonoid& IdempotentSemiring::powerset_monoid(std::size_t c) const { return *impl_->comps.at(c).mon; }
const IdempotentSemiring::Table& IdempotentSemiring::table_component(std::size_t c) const {
  return impl_->comps.at(c).tab;
}

std::uint64_t IdempotentSemiring::field(Value x, std::size_t c) const {
  const auto& cc = impl_->comps.at(c);
  return (x >> cc.offset) & cc.mask;
}

Value IdempotentSemiring::with_field(Value x, std::size_t c, std::uint64_t v) const {
  const auto& cc = impl_->comps.at(c);
  return (x & ~(cc.mask << cc.offset)) | ((v & cc.mask) << cc.offset);
}

std::vector<Element> IdempotentSemiring::subset(Value x, std::size_t c) const {
  std::vector<Element> out;
  for (std::uint64_t f = field(x, c); f; f &= f - 1) out.push_back(static_cast<Element>(std::countr_zero(f)));
  return out;
}

std::optional<std::uint64_t> IdempotentSemiring::size() const {
  unsigned __int128 n = 1;
  for (const auto& c : impl_->comps) {
    n *= c.pow ? (static_cast<unsigned __int128>(1) << c.width) : c.tab.size;
    if (n > (static_cast<unsigned __int128>(1) << 63)) return std::nullopt;
  }
  return static_cast<std::uint64_t>(n);
}

namespace {

std::vector<Value> cartesian(const std::vector<std::vector<Value>>& choices, std::size_t cap, const char* what) {
  unsigned __int128 total = 1;
  for (const auto& c : choices) total *= c.size();
  if (total > cap) throw ResourceError(std::string(what) + " has more than " + std::to_string(cap) + " elements");
  std::vector<Value> out{0};
  for (const auto& c : choices) {
    std::vector<Value> next;
    next.reserve(out.size() * c.size());
    for (Value base : out)
      for (Value v : c) next.push_back(base | v);
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Value> IdempotentSemiring::elements(std::size_t cap) const {
  std::vector<std::vector<Value>> choices;
  for (const auto& c : impl_->comps) {
    std::vector<Value> vs;
    std::uint64_t n = c.pow ? (c.width >= 32 ? ~0ull : (1ull << c.width)) : c.tab.size;
    if (n > cap) throw ResourceError("semiring has more than " + std::to_string(cap) + " elements");
    for (std::uint64_t v = 0; v < n; ++v) vs.push_back(v << c.offset);
    choices.push_back(std::move(vs));
  }
  return cartesian(choices, cap, "semiring");
}

std::vector<Value> IdempotentSemiring::below(Value x, std::size_t cap) const {
  std::vector<std::vector<Value>> choices;
  for (const auto& c : impl_->comps) {
    std::uint64_t f = (x >> c.offset) & c.mask;
    std::vector<Value> vs;
    if (c.pow) {
      if (std::popcount(f) > 30) throw ResourceError("downset too large to enumerate");
      for (std::uint64_t s = f;; s = (s - 1) & f) {
        vs.push_back(s << c.offset);
        if (s == 0) break;
      }
    } else {
      for (std::uint32_t y = 0; y < c.tab.size; ++y)
        if (c.tab.add[y * c.tab.size + f] == f) vs.push_back(std::uint64_t{y} << c.offset);
    }
    choices.push_back(std::move(vs));
  }
  return cartesian(choices, cap, "downset");
}

bool IdempotentSemiring::is_element(Value x) const {
  Value covered = 0;
  for (const auto& c : impl_->comps) {
    std::uint64_t f = (x >> c.offset) & c.mask;
    if (!c.pow && f >= c.tab.size) return false;
    covered |= c.mask << c.offset;
  }
  return (x & ~covered) == 0;
}

std::string IdempotentSemiring::format(Value x) const {
  std::string out;
  const auto& comps = impl_->comps;
  if (comps.size() > 1) out += "(";
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) out += ",";
    if (comps[i].pow) {
      out += "{";
      bool first = true;
      for (Element e : subset(x, i)) {
        if (!first) out += ",";
        first = false;
        out += std::to_string(e);
      }
      out += "}";
    } else {
      out += std::to_string(field(x, i));
    }
  }
  if (comps.size() > 1) out += ")";
  return out;
}

SemiringReport validate_semiring(const IdempotentSemiring& r) {
  for (std::size_t ci = 0; ci < r.components(); ++ci) {
    if (r.is_powerset(ci)) continue;
    const auto& t = r.table_component(ci);
    const std::uint32_t n = static_cast<std::uint32_t>(t.size);
    auto A = [&](std::uint32_t x, std::uint32_t y) { return t.add[x * n + y]; };
    auto M = [&](std::uint32_t x, std::uint32_t y) { return t.mul[x * n + y]; };
    auto fail = [&](const char* axiom, std::vector<std::uint32_t> w) {
      SemiringReport rep;
      rep.ok = false;
      rep.axiom = axiom;
      for (auto v : w) rep.witness.push_back(r.with_field(r.zero(), ci, v));
      return rep;
    };
    for (std::uint32_t x = 0; x < n; ++x)
      if (A(x, x) != x) return fail("addition idempotence", {x, x});
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t y = 0; y < n; ++y)
        if (A(x, y) != A(y, x)) return fail("addition commutativity", {x, y});
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t y = 0; y < n; ++y)
        for (std::uint32_t z = 0; z < n; ++z)
          if (A(A(x, y), z) != A(x, A(y, z))) return fail("addition associativity", {x, y, z});
    for (std::uint32_t x = 0; x < n; ++x)
      if (A(t.zero, x) != x) return fail("additive identity", {t.zero, x});
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t y = 0; y < n; ++y)
        for (std::uint32_t z = 0; z < n; ++z)
          if (M(M(x, y), z) != M(x, M(y, z))) return fail("multiplication associativity", {x, y, z});
    for (std::uint32_t x = 0; x < n; ++x)
      if (M(t.one, x) != x || M(x, t.one) != x) return fail("multiplicative identity", {t.one, x});
    for (std::uint32_t x = 0; x < n; ++x)
      if (M(t.zero, x) != t.zero || M(x, t.zero) != t.zero) return fail("zero annihilation", {t.zero, x});
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t y = 0; y < n; ++y)
        for (std::uint32_t z = 0; z < n; ++z) {
          if (M(x, A(y, z)) != A(M(x, y), M(x, z))) return fail("left distributivity", {x, y, z});
          if (M(A(y, z), x) != A(M(y, x), M(z, x))) return fail("right distributivity", {x, y, z});
        }
  }
  return {};
}

std::vector<std::vector<bool>> canonical_order(const IdempotentSemiring& r) {
  auto els = r.elements(4096);
  std::vector<std::vector<bool>> leq(els.size(), std::vector<bool>(els.size()));
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = 0; j < els.size(); ++j) leq[i][j] = r.leq(els[i], els[j]);
  return leq;
}

std::vector<Value> downset(const IdempotentSemiring& r, const std::vector<Value>& s) {
  std::set<Value> out;
  for (Value x : s)
    for (Value y : r.below(x)) out.insert(y);
  return {out.begin(), out.end()};
}

IdempotentSemiring powerset_semiring(const FiniteMonoid& m, const Config& cfg) {
  if (m.size() > cfg.powerset_cap)
    throw ResourceError("powerset semiring over a monoid of size " + std::to_string(m.size()) +
                        " exceeds powerset_cap " + std::to_string(cfg.powerset_cap));
  return IdempotentSemiring::powerset(std::make_shared<const FiniteMonoid>(m));
}

Value RatingMap::eval(const Word& w) const {
  Value x = semiring.one();
  for (Symbol a : w) x = semiring.mul(x, letter(a));
  return x;
}

Value RatingMap::eval(const std::vector<Word>& language) const {
  Value x = semiring.zero();
  for (const auto& w : language) x = semiring.add(x, eval(w));
  return x;
}

RatingMap rho_alpha(const Morphism& alpha, const Config& cfg) {
  if (alpha.monoid().size() > cfg.powerset_cap)
    throw ResourceError("powerset semiring over a monoid of size " + std::to_string(alpha.monoid().size()) +
                        " exceeds powerset_cap " + std::to_string(cfg.powerset_cap));
  RatingMap rm;
  rm.semiring = IdempotentSemiring::powerset(alpha.monoid_ptr());
  rm.alphabet = alpha.alphabet();
  for (Element x : alpha.letters()) rm.letters.push_back(1ull << x);
  return rm;
}

RatingMap product_rating_map(const std::vector<RatingMap>& rs) {
  if (rs.empty()) throw InputError("product_rating_map needs at least one map");
  std::vector<IdempotentSemiring> parts;
  for (const auto& r : rs) {
    if (!(r.alphabet == rs[0].alphabet)) throw InputError("product_rating_map: alphabet mismatch");
    parts.push_back(r.semiring);
  }
  RatingMap out;
  out.semiring = IdempotentSemiring::product(parts);
  out.alphabet = rs[0].alphabet;
  out.letters.assign(out.alphabet.size(), 0);
  // Components are concatenated in order, so fields can be copied across.
  std::size_t base = 0;
  for (const auto& r : rs) {
    for (std::size_t c = 0; c < r.semiring.components(); ++c)
      for (std::size_t a = 0; a < out.letters.size(); ++a)
        out.letters[a] = out.semiring.with_field(out.letters[a], base + c, r.semiring.field(r.letters[a], c));
    base += r.semiring.components();
  }
  return out;
}

ImageMonoid image_monoid(const RatingMap& rm, const Config& cfg) {
  auto mul = [&rm](Value x, Value y) { return rm.semiring.mul(x, y); };
  auto c = close_generators<Value, std::hash<Value>>(rm.semiring.one(), rm.letters, mul, cfg.monoid_cap,
                                                     "rating map image");
  return {closure_morphism(rm.alphabet, c.cayley), std::move(c.elements)};
}

std::vector<Value> generated_subsemiring(const RatingMap& rm, std::size_t cap) {
  const auto& r = rm.semiring;
  std::set<Value> seen;
  std::vector<Value> list;
  auto push = [&](Value v) {
    if (seen.insert(v).second) {
      if (seen.size() > cap) throw ResourceError("generated sub-semiring exceeds " + std::to_string(cap) + " elements");
      list.push_back(v);
    }
  };
  push(r.zero());
  push(r.one());
  for (Value v : rm.letters) push(v);
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      Value x = list[i], y = list[j];
      push(r.add(x, y));
      push(r.mul(x, y));
      push(r.mul(y, x));
    }
  return {seen.begin(), seen.end()};
}

bool DownSet::contains(Value x) const {
  for (Value m : max_)
    if (r_.leq(x, m)) return true;
  return false;
}

bool DownSet::insert(Value x) {
  if (contains(x)) return false;
  std::erase_if(max_, [&](Value m) { return r_.leq(m, x); });
  max_.insert(std::lower_bound(max_.begin(), max_.end(), x), x);
  return true;
}

bool DownSet::insert_all(const std::vector<Value>& xs) {
  bool grew = false;
  for (Value x : xs) grew = insert(x) || grew;
  return grew;
}

std::vector<Value> DownSet::elements(std::size_t cap) const {
  std::set<Value> out;
  for (Value m : max_) {
    for (Value y : r_.below(m, cap)) out.insert(y);
    if (out.size() > cap) throw ResourceError("downset has more than " + std::to_string(cap) + " elements");
  }
  return {out.begin(), out.end()};
}

bool DownSet::subset_of(const DownSet& o) const {
  return std::all_of(max_.begin(), max_.end(), [&](Value m) { return o.contains(m); });
}

}  // namespace sfc
