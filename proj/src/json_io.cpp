#include "sfc/json_io.hpp"

#include <fstream>

namespace sfc {

namespace {

template <class T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("bad field '") + key + "': " + e.what());
  }
}

}  // namespace

json to_json(const Dfa& d) {
  json j;
  json alpha = json::array();
  for (char c : d.alphabet().symbols()) alpha.push_back(std::string(1, c));
  j["alphabet"] = alpha;
  j["states"] = d.states();
  j["initial"] = d.initial();
  json fin = json::array();
  for (State q = 0; q < d.states(); ++q)
    if (d.is_final(q)) fin.push_back(q);
  j["finals"] = fin;
  json delta = json::array();
  for (State q = 0; q < d.states(); ++q) {
    json row = json::array();
    for (std::size_t a = 0; a < d.alphabet().size(); ++a) row.push_back(d.next(q, static_cast<Symbol>(a)));
    delta.push_back(row);
  }
  j["delta"] = delta;
  return j;
}

Dfa dfa_from_json(const json& j) {
  std::string symbols;
  for (const auto& s : get<std::vector<std::string>>(j, "alphabet")) {
    if (s.size() != 1) throw InputError("alphabet symbols must be single characters");
    symbols += s;
  }
  Alphabet a(symbols);
  auto n = get<std::size_t>(j, "states");
  auto init = get<State>(j, "initial");
  std::vector<bool> fin(n);
  for (auto q : get<std::vector<State>>(j, "finals")) {
    if (q >= n) throw InputError("final state out of range");
    fin[q] = true;
  }
  auto rows = get<std::vector<std::vector<State>>>(j, "delta");
  if (rows.size() != n) throw InputError("delta must have one row per state");
  std::vector<State> delta;
  for (const auto& r : rows) {
    if (r.size() != a.size()) throw InputError("delta rows must have one entry per symbol");
    delta.insert(delta.end(), r.begin(), r.end());
  }
  return Dfa(a, n, init, std::move(fin), std::move(delta));
}

json to_json(const Morphism& m) {
  const auto& mon = m.monoid();
  json j;
  j["size"] = mon.size();
  j["identity"] = mon.identity();
  json mul = json::array();
  for (Element x = 0; x < mon.size(); ++x) {
    json row = json::array();
    for (Element y = 0; y < mon.size(); ++y) row.push_back(mon.mul(x, y));
    mul.push_back(row);
  }
  j["mul"] = mul;
  json letters = json::object();
  for (std::size_t a = 0; a < m.alphabet().size(); ++a)
    letters[std::string(1, m.alphabet().symbol(static_cast<Symbol>(a)))] = m.letter(static_cast<Symbol>(a));
  j["letters"] = letters;
  return j;
}

json to_json(const RecognizedLanguage& l) {
  json j = to_json(l.morphism);
  j["accepting"] = l.accepting_set();
  return j;
}

Morphism morphism_from_json(const json& j, std::size_t cap) {
  auto n = get<std::size_t>(j, "size");
  if (n > cap) throw ResourceError("monoid of size " + std::to_string(n) + " exceeds monoid_cap");
  auto id = get<Element>(j, "identity");
  auto rows = get<std::vector<std::vector<Element>>>(j, "mul");
  if (rows.size() != n) throw InputError("mul must have one row per element");
  std::vector<Element> table;
  for (const auto& r : rows) {
    if (r.size() != n) throw InputError("mul rows must have one entry per element");
    table.insert(table.end(), r.begin(), r.end());
  }
  auto monoid = std::make_shared<const FiniteMonoid>(n, id, std::move(table), true);
  auto letters = get<std::map<std::string, Element>>(j, "letters");
  if (letters.empty()) throw InputError("morphism needs at least one letter");
  std::string symbols;
  std::vector<Element> images;
  for (const auto& [k, v] : letters) {
    if (k.size() != 1) throw InputError("letter keys must be single characters");
    symbols += k;
    images.push_back(v);
  }
  return Morphism(Alphabet(symbols), std::move(monoid), std::move(images));
}

Morphism load_morphism(const std::string& path, std::size_t cap) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open morphism file '" + path + "'");
  json j;
  try {
    f >> j;
  } catch (const json::exception& e) {
    throw InputError("invalid JSON in '" + path + "': " + e.what());
  }
  return morphism_from_json(j, cap);
}

IdempotentSemiring semiring_from_json(const json& j) {
  IdempotentSemiring::Table t;
  t.size = get<std::size_t>(j, "size");
  for (const auto& r : get<std::vector<std::vector<std::uint32_t>>>(j, "add")) t.add.insert(t.add.end(), r.begin(), r.end());
  for (const auto& r : get<std::vector<std::vector<std::uint32_t>>>(j, "mul")) t.mul.insert(t.mul.end(), r.begin(), r.end());
  t.zero = get<std::uint32_t>(j, "zero");
  t.one = get<std::uint32_t>(j, "one");
  auto r = IdempotentSemiring::table(std::move(t));
  auto rep = validate_semiring(r);
  if (!rep.ok) throw InputError("not an idempotent semiring: " + rep.axiom + " fails");
  return r;
}

json value_to_json(const IdempotentSemiring& r, Value v) {
  auto comp = [&](std::size_t c) -> json {
    if (r.is_powerset(c)) return r.subset(v, c);
    return r.field(v, c);
  };
  if (r.components() == 1) return comp(0);
  json arr = json::array();
  for (std::size_t c = 0; c < r.components(); ++c) arr.push_back(comp(c));
  return arr;
}

json to_json(const MembershipVerdict& v) {
  json j;
  j["answer"] = v.answer;
  j["witness"] = v.witness ? json(*v.witness) : json(nullptr);
  j["monoid_size"] = v.monoid_size;
  if (v.orbits.empty()) {
    j["kernel"] = v.kernel;
  } else {
    json o = json::object();
    for (const auto& [e, orbit] : v.orbits) o[std::to_string(e)] = orbit;
    j["orbits"] = o;
  }
  return j;
}

json to_json(const CoverResult& r, const IdempotentSemiring& semiring, bool trace) {
  json j;
  j["answer"] = r.answer;
  j["opt_size"] = r.opt.maxima().size();
  j["rounds"] = r.rounds;
  json mx = json::array();
  for (Value v : r.opt.maxima()) mx.push_back(value_to_json(semiring, v));
  j["opt_maxima"] = mx;
  if (trace) {
    json t = json::array();
    for (const auto& e : r.trace) {
      json x;
      x["round"] = e.round;
      x["rule"] = e.rule;
      if (e.point) x["point"] = *e.point;
      x["element"] = value_to_json(semiring, e.value);
      t.push_back(x);
    }
    j["trace"] = t;
  }
  return j;
}

json to_json(const SdViolation& v) {
  return json{{"offset", v.offset}, {"node", v.node}, {"message", v.message}, {"witness", v.witness}};
}

}  // namespace sfc
