#include "sfc/automata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <unordered_map>

#include "sfc/error.hpp"

namespace sfc {

// ---------------------------------------------------------------- Alphabet

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  if (symbols_.empty()) throw InputError("alphabet must be nonempty");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(symbols_[i]);
    if (!std::isalnum(c)) throw InputError(std::string("alphabet symbol '") + symbols_[i] + "' is not a letter or digit");
    if (symbols_.find(symbols_[i]) != i) throw InputError(std::string("duplicate alphabet symbol '") + symbols_[i] + "'");
  }
}

std::optional<Symbol> Alphabet::find(char c) const noexcept {
  auto p = symbols_.find(c);
  if (p == std::string::npos) return std::nullopt;
  return static_cast<Symbol>(p);
}

Symbol Alphabet::index(char c) const {
  if (auto s = find(c)) return *s;
  throw InputError(std::string("unknown symbol '") + c + "'");
}

Word Alphabet::encode(std::string_view w) const {
  Word out;
  out.reserve(w.size());
  for (char c : w) out.push_back(index(c));
  return out;
}

std::string Alphabet::decode(const Word& w) const {
  std::string out;
  out.reserve(w.size());
  for (Symbol s : w) out.push_back(symbol(s));
  return out;
}

// ------------------------------------------------------------------- Regex

Regex Regex::binary(Kind k, Regex l, Regex r) {
  Regex x;
  x.kind = k;
  x.kids.push_back(std::move(l));
  x.kids.push_back(std::move(r));
  return x;
}

Regex Regex::unary(Kind k, Regex c) {
  Regex x;
  x.kind = k;
  x.kids.push_back(std::move(c));
  return x;
}

std::size_t Regex::size() const {
  std::size_t n = 1;
  for (const auto& k : kids) n += k.size();
  return n;
}

std::string Regex::to_string(const Alphabet& a) const {
  switch (kind) {
    case Kind::Empty: return "%";
    case Kind::Epsilon: return "_";
    case Kind::Letter: return std::string(1, a.symbol(letter));
    case Kind::Union: return "(" + kids[0].to_string(a) + "+" + kids[1].to_string(a) + ")";
    case Kind::Intersect: return "(" + kids[0].to_string(a) + "&" + kids[1].to_string(a) + ")";
    case Kind::Concat: return "(" + kids[0].to_string(a) + kids[1].to_string(a) + ")";
    case Kind::Star: return "(" + kids[0].to_string(a) + ")*";
    case Kind::Complement: return "~(" + kids[0].to_string(a) + ")";
  }
  return "";
}

namespace {

class RegexParser {
 public:
  RegexParser(std::string_view text, const Alphabet& a) : s_(text), a_(a) {}

  Regex parse() {
    Regex r = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return r;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool atom_start() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '_' || c == '%' || c == '~' || c == '(' || std::isalnum(static_cast<unsigned char>(c));
  }

  Regex expr() {
    Regex r = term();
    while (peek('+')) {
      ++pos_;
      r = Regex::binary(Regex::Kind::Union, std::move(r), term());
    }
    return r;
  }

  Regex term() {
    Regex r = factor();
    while (peek('&')) {
      ++pos_;
      r = Regex::binary(Regex::Kind::Intersect, std::move(r), factor());
    }
    return r;
  }

  Regex factor() {
    if (!atom_start()) throw ParseError("expected expression", pos_);
    Regex r = atom();
    while (atom_start()) r = Regex::binary(Regex::Kind::Concat, std::move(r), atom());
    return r;
  }

  Regex atom() {
    skip();
    if (s_[pos_] == '~') {
      ++pos_;
      if (!atom_start()) throw ParseError("expected expression", pos_);
      return Regex::unary(Regex::Kind::Complement, atom());
    }
    Regex r = primary();
    while (peek('*')) {
      ++pos_;
      r = Regex::unary(Regex::Kind::Star, std::move(r));
    }
    return r;
  }

  Regex primary() {
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Regex r = expr();
      if (!peek(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return r;
    }
    if (c == '_') {
      ++pos_;
      return Regex::epsilon();
    }
    if (c == '%') {
      ++pos_;
      return Regex::empty();
    }
    auto sym = a_.find(c);
    if (!sym) throw ParseError(std::string("unknown symbol '") + c + "'", pos_);
    ++pos_;
    return Regex::sym(*sym);
  }

  std::string_view s_;
  const Alphabet& a_;
  std::size_t pos_ = 0;
};

}  // namespace

Regex parse_regex(std::string_view text, const Alphabet& alphabet) {
  return RegexParser(text, alphabet).parse();
}

// --------------------------------------------------------------------- Dfa

Dfa::Dfa(Alphabet alphabet, std::size_t states, State initial, std::vector<bool> finals,
         std::vector<State> delta)
    : alphabet_(std::move(alphabet)), initial_(initial), finals_(std::move(finals)), delta_(std::move(delta)) {
  if (states == 0) throw InputError("dfa must have at least one state");
  if (finals_.size() != states) throw InputError("dfa finals vector has wrong length");
  if (delta_.size() != states * alphabet_.size()) throw InputError("dfa transition table is not complete");
  if (initial_ >= states) throw InputError("dfa initial state out of range");
  for (State t : delta_)
    if (t >= states) throw InputError("dfa transition target out of range");
}

State Dfa::run(State q, const Word& w) const {
  for (Symbol a : w) q = next(q, a);
  return q;
}

namespace {

// Epsilon-NFA used for concatenation and star; symbol -1 marks epsilon.
struct Nfa {
  std::size_t k = 0;
  std::vector<std::vector<std::pair<int, State>>> edges;
  std::vector<bool> finals;
  State initial = 0;

  State add_state(bool final) {
    edges.emplace_back();
    finals.push_back(final);
    return static_cast<State>(edges.size() - 1);
  }
  // Copies d's states with an offset; finals copied only if keep_finals.
  State embed(const Dfa& d, bool keep_finals) {
    State off = static_cast<State>(edges.size());
    for (State q = 0; q < d.states(); ++q) add_state(keep_finals && d.is_final(q));
    for (State q = 0; q < d.states(); ++q)
      for (std::size_t a = 0; a < k; ++a)
        edges[off + q].push_back({static_cast<int>(a), off + d.next(q, static_cast<Symbol>(a))});
    return off;
  }

  std::vector<State> closure(std::vector<State> set) const {
    std::vector<bool> seen(edges.size());
    for (State q : set) seen[q] = true;
    for (std::size_t i = 0; i < set.size(); ++i)
      for (auto [a, t] : edges[set[i]])
        if (a < 0 && !seen[t]) {
          seen[t] = true;
          set.push_back(t);
        }
    std::sort(set.begin(), set.end());
    return set;
  }

  Dfa determinize(const Alphabet& alpha) const {
    std::map<std::vector<State>, State> ids;
    std::vector<std::vector<State>> sets;
    auto intern = [&](std::vector<State> s) {
      auto [it, fresh] = ids.emplace(std::move(s), static_cast<State>(sets.size()));
      if (fresh) sets.push_back(it->first);
      return it->second;
    };
    intern(closure({initial}));
    std::vector<State> delta;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t a = 0; a < k; ++a) {
        std::vector<State> nxt;
        for (State q : sets[i])
          for (auto [b, t] : edges[q])
            if (b == static_cast<int>(a)) nxt.push_back(t);
        std::sort(nxt.begin(), nxt.end());
        nxt.erase(std::unique(nxt.begin(), nxt.end()), nxt.end());
        delta.push_back(intern(closure(std::move(nxt))));
      }
    }
    std::vector<bool> fin(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i)
      fin[i] = std::any_of(sets[i].begin(), sets[i].end(), [&](State q) { return finals[q]; });
    return Dfa(alpha, sets.size(), 0, std::move(fin), std::move(delta));
  }
};

void require_same_alphabet(const Dfa& d1, const Dfa& d2) {
  if (!(d1.alphabet() == d2.alphabet()))
    throw InputError("alphabet mismatch: '" + d1.alphabet().symbols() + "' vs '" + d2.alphabet().symbols() + "'");
}

}  // namespace

Dfa empty_language(const Alphabet& a) {
  return Dfa(a, 1, 0, {false}, std::vector<State>(a.size(), 0));
}

Dfa universal_language(const Alphabet& a) {
  return Dfa(a, 1, 0, {true}, std::vector<State>(a.size(), 0));
}

Dfa epsilon_language(const Alphabet& a) {
  std::vector<State> delta(2 * a.size(), 1);
  return Dfa(a, 2, 0, {true, false}, std::move(delta));
}

Dfa letter_language(const Alphabet& a, Symbol s) {
  std::vector<State> delta(3 * a.size(), 2);
  delta[static_cast<std::size_t>(s)] = 1;
  return Dfa(a, 3, 0, {false, true, false}, std::move(delta));
}

Dfa minimize(const Dfa& d) {
  const std::size_t k = d.alphabet().size();
  // Reachable states in BFS order.
  std::vector<int> reach(d.states(), -1);
  std::vector<State> order{d.initial()};
  reach[d.initial()] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t a = 0; a < k; ++a) {
      State t = d.next(order[i], static_cast<Symbol>(a));
      if (reach[t] < 0) {
        reach[t] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }
  const std::size_t n = order.size();
  // Moore refinement over the reachable part.
  std::vector<std::uint32_t> cls(n);
  for (std::size_t i = 0; i < n; ++i) cls[i] = d.is_final(order[i]) ? 1 : 0;
  std::size_t classes = 0;
  for (;;) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> sig_ids;
    std::vector<std::uint32_t> next_cls(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::uint32_t> sig{cls[i]};
      for (std::size_t a = 0; a < k; ++a)
        sig.push_back(cls[static_cast<std::size_t>(reach[d.next(order[i], static_cast<Symbol>(a))])]);
      auto [it, fresh] = sig_ids.emplace(std::move(sig), static_cast<std::uint32_t>(sig_ids.size()));
      next_cls[i] = it->second;
    }
    std::size_t count = sig_ids.size();
    cls = std::move(next_cls);
    if (count == classes) break;
    classes = count;
  }
  // Canonical numbering: BFS over classes from the initial one, symbols in order.
  std::vector<std::size_t> rep(classes);
  for (std::size_t i = n; i-- > 0;) rep[cls[i]] = i;
  std::vector<int> num(classes, -1);
  std::vector<std::uint32_t> bfs{cls[0]};
  num[cls[0]] = 0;
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (std::size_t a = 0; a < k; ++a) {
      auto c = cls[static_cast<std::size_t>(reach[d.next(order[rep[bfs[i]]], static_cast<Symbol>(a))])];
      if (num[c] < 0) {
        num[c] = static_cast<int>(bfs.size());
        bfs.push_back(c);
      }
    }
  std::vector<bool> fin(classes);
  std::vector<State> delta(classes * k);
  for (std::size_t i = 0; i < classes; ++i) {
    State q = order[rep[bfs[i]]];
    fin[i] = d.is_final(q);
    for (std::size_t a = 0; a < k; ++a)
      delta[i * k + a] = static_cast<State>(num[cls[static_cast<std::size_t>(reach[d.next(q, static_cast<Symbol>(a))])]]);
  }
  return Dfa(d.alphabet(), classes, 0, std::move(fin), std::move(delta));
}

Dfa product(const Dfa& d1, const Dfa& d2, BoolOp mode) {
  require_same_alphabet(d1, d2);
  const std::size_t k = d1.alphabet().size();
  std::unordered_map<std::uint64_t, State> ids;
  std::vector<std::pair<State, State>> pairs;
  auto intern = [&](State p, State q) {
    std::uint64_t key = (std::uint64_t{p} << 32) | q;
    auto [it, fresh] = ids.emplace(key, static_cast<State>(pairs.size()));
    if (fresh) pairs.emplace_back(p, q);
    return it->second;
  };
  intern(d1.initial(), d2.initial());
  std::vector<State> delta;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t a = 0; a < k; ++a) {
      auto [p, q] = pairs[i];
      delta.push_back(intern(d1.next(p, static_cast<Symbol>(a)), d2.next(q, static_cast<Symbol>(a))));
    }
  std::vector<bool> fin(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    bool x = d1.is_final(pairs[i].first), y = d2.is_final(pairs[i].second);
    switch (mode) {
      case BoolOp::Union: fin[i] = x || y; break;
      case BoolOp::Intersection: fin[i] = x && y; break;
      case BoolOp::Difference: fin[i] = x && !y; break;
      case BoolOp::SymmetricDifference: fin[i] = x != y; break;
    }
  }
  return Dfa(d1.alphabet(), pairs.size(), 0, std::move(fin), std::move(delta));
}

Dfa complement(const Dfa& d) {
  std::vector<bool> fin(d.states());
  for (State q = 0; q < d.states(); ++q) fin[q] = !d.is_final(q);
  return Dfa(d.alphabet(), d.states(), d.initial(), std::move(fin), d.delta());
}

Dfa concat(const Dfa& d1, const Dfa& d2) {
  require_same_alphabet(d1, d2);
  Nfa n;
  n.k = d1.alphabet().size();
  State o1 = n.embed(d1, false);
  State o2 = n.embed(d2, true);
  for (State q = 0; q < d1.states(); ++q)
    if (d1.is_final(q)) n.edges[o1 + q].push_back({-1, o2 + d2.initial()});
  n.initial = o1 + d1.initial();
  return minimize(n.determinize(d1.alphabet()));
}

Dfa star(const Dfa& d) {
  Nfa n;
  n.k = d.alphabet().size();
  State s = n.add_state(true);
  State o = n.embed(d, false);
  n.edges[s].push_back({-1, o + d.initial()});
  for (State q = 0; q < d.states(); ++q)
    if (d.is_final(q)) n.edges[o + q].push_back({-1, s});
  n.initial = s;
  return minimize(n.determinize(d.alphabet()));
}

Dfa plus(const Dfa& d) { return concat(d, star(d)); }

Dfa power(const Dfa& d, std::size_t n) {
  Dfa r = epsilon_language(d.alphabet());
  for (std::size_t i = 0; i < n; ++i) r = concat(r, d);
  return minimize(r);
}

Dfa compile(const Regex& r, const Alphabet& a) {
  using K = Regex::Kind;
  switch (r.kind) {
    case K::Empty: return empty_language(a);
    case K::Epsilon: return epsilon_language(a);
    case K::Letter:
      if (r.letter < 0 || static_cast<std::size_t>(r.letter) >= a.size()) throw InputError("regex letter outside alphabet");
      return letter_language(a, r.letter);
    case K::Union: return minimize(product(compile(r.kids[0], a), compile(r.kids[1], a), BoolOp::Union));
    case K::Intersect: return minimize(product(compile(r.kids[0], a), compile(r.kids[1], a), BoolOp::Intersection));
    case K::Concat: return concat(compile(r.kids[0], a), compile(r.kids[1], a));
    case K::Star: return star(compile(r.kids[0], a));
    case K::Complement: return complement(compile(r.kids[0], a));
  }
  return empty_language(a);
}

Dfa compile(std::string_view regex_text, const Alphabet& alphabet) {
  return minimize(compile(parse_regex(regex_text, alphabet), alphabet));
}

std::optional<Word> shortest_word(const Dfa& d) {
  const std::size_t k = d.alphabet().size();
  std::vector<std::pair<int, Symbol>> parent(d.states(), {-2, 0});
  std::deque<State> queue{d.initial()};
  parent[d.initial()] = {-1, 0};
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    if (d.is_final(q)) {
      Word w;
      for (State x = q; parent[x].first >= 0; x = static_cast<State>(parent[x].first)) w.push_back(parent[x].second);
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (std::size_t a = 0; a < k; ++a) {
      State t = d.next(q, static_cast<Symbol>(a));
      if (parent[t].first == -2) {
        parent[t] = {static_cast<int>(q), static_cast<Symbol>(a)};
        queue.push_back(t);
      }
    }
  }
  return std::nullopt;
}

bool is_empty(const Dfa& d) { return !shortest_word(d).has_value(); }

bool equivalent(const Dfa& d1, const Dfa& d2) {
  return is_empty(product(d1, d2, BoolOp::SymmetricDifference));
}

bool isomorphic(const Dfa& d1, const Dfa& d2) { return minimize(d1) == minimize(d2); }

std::vector<Word> all_words(std::size_t k, std::size_t maxlen) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= maxlen; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t a = 0; a < k; ++a) {
        Word w = out[i];
        w.push_back(static_cast<Symbol>(a));
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

}  // namespace sfc
