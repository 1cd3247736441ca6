#include "sfc/sd.hpp"

#include <array>
#include <cctype>
#include <deque>
#include <map>

namespace sfc {

namespace {

using Key = std::array<std::uint32_t, 4>;
constexpr int kSwitch = -1;

// 0-1 BFS where letters cost 1 and phase switches cost 0; returns the label
// sequence of a shortest path to a goal.
template <class Succ, class Goal>
std::optional<std::vector<int>> shortest_labels(Key start, Succ&& succ, Goal&& goal) {
  struct Info {
    std::size_t dist;
    Key parent;
    int label;
  };
  std::map<Key, Info> info;
  std::deque<Key> queue{start};
  info[start] = {0, start, 0};
  std::vector<std::pair<Key, int>> out;
  while (!queue.empty()) {
    Key k = queue.front();
    queue.pop_front();
    std::size_t d = info[k].dist;
    if (goal(k)) {
      std::vector<int> labels;
      for (Key x = k; x != start; x = info[x].parent) labels.push_back(info[x].label);
      return std::vector<int>(labels.rbegin(), labels.rend());
    }
    out.clear();
    succ(k, out);
    for (auto& [to, label] : out) {
      std::size_t nd = d + (label == kSwitch ? 0 : 1);
      auto it = info.find(to);
      if (it != info.end() && it->second.dist <= nd) continue;
      info[to] = {nd, k, label};
      if (label == kSwitch) queue.push_front(to);
      else queue.push_back(to);
    }
  }
  return std::nullopt;
}

std::vector<Word> split_labels(const std::vector<int>& labels) {
  std::vector<Word> parts(1);
  for (int l : labels) {
    if (l == kSwitch) parts.emplace_back();
    else parts.back().push_back(l);
  }
  return parts;
}

Dfa nonempty_words(const Alphabet& a) { return complement(epsilon_language(a)); }

}  // namespace

std::optional<Word> prefix_code_violation(const Dfa& k) {
  if (k.is_final(k.initial())) return Word{};
  return shortest_word(product(k, concat(k, nonempty_words(k.alphabet())), BoolOp::Intersection));
}

bool is_prefix_code(const Dfa& k) { return !prefix_code_violation(k).has_value(); }

std::optional<DelayWitness> sync_delay_witness(const Dfa& k, std::size_t d) {
  if (d == 0) throw InputError("synchronization delay must be at least 1");
  if (!is_prefix_code(k)) throw InputError("synchronization delay is only defined for prefix codes");
  const Dfa kp = plus(k);         // K+ (its complement is read off the same state)
  const Dfa kd = power(k, d);     // K^d
  const std::size_t nsym = k.alphabet().size();
  auto succ = [&](const Key& s, std::vector<std::pair<Key, int>>& out) {
    const auto [phase, q1, q2, unused] = s;
    for (std::size_t a = 0; a < nsym; ++a) {
      Symbol x = static_cast<Symbol>(a);
      State n1 = kp.next(q1, x);
      if (phase == 0) out.push_back({Key{0, n1, 0, 0}, x});
      else if (phase == 1) out.push_back({Key{1, n1, kd.next(q2, x), 0}, x});
      else out.push_back({Key{2, n1, 0, 0}, x});
    }
    if (phase == 0) out.push_back({Key{1, q1, kd.initial(), 0}, kSwitch});
    // v in K^d and uv not in K+.
    if (phase == 1 && kd.is_final(q2) && !kp.is_final(q1)) out.push_back({Key{2, q1, 0, 0}, kSwitch});
  };
  auto goal = [&](const Key& s) { return s[0] == 2 && kp.is_final(s[1]); };
  auto labels = shortest_labels(Key{0, kp.initial(), 0, 0}, succ, goal);
  if (!labels) return std::nullopt;
  auto parts = split_labels(*labels);
  return DelayWitness{parts[0], parts[1], parts[2]};
}

bool has_sync_delay(const Dfa& k, std::size_t d) { return !sync_delay_witness(k, d).has_value(); }

std::optional<std::size_t> min_sync_delay(const Dfa& k, std::size_t dmax) {
  for (std::size_t d = 1; d <= dmax; ++d)
    if (has_sync_delay(k, d)) return d;
  return std::nullopt;
}

std::optional<Word> common_word(const Dfa& k, const Dfa& l) {
  return shortest_word(product(k, l, BoolOp::Intersection));
}

bool are_disjoint(const Dfa& k, const Dfa& l) { return !common_word(k, l).has_value(); }

std::optional<Word> ambiguity_witness(const Dfa& k, const Dfa& l) {
  if (!(k.alphabet() == l.alphabet())) throw InputError("alphabet mismatch");
  const std::size_t nsym = k.alphabet().size();
  // Phase 0: before the first split (K state). Phase 1: between the splits
  // (K state, L state, moved flag). Phase 2: after both (two L states).
  auto succ = [&](const Key& s, std::vector<std::pair<Key, int>>& out) {
    const auto [phase, x, y, moved] = s;
    for (std::size_t a = 0; a < nsym; ++a) {
      Symbol c = static_cast<Symbol>(a);
      if (phase == 0) out.push_back({Key{0, k.next(x, c), 0, 0}, c});
      else if (phase == 1) out.push_back({Key{1, k.next(x, c), l.next(y, c), 1}, c});
      else out.push_back({Key{2, l.next(x, c), l.next(y, c), 0}, c});
    }
    if (phase == 0 && k.is_final(x)) out.push_back({Key{1, x, l.initial(), 0}, kSwitch});
    if (phase == 1 && moved && k.is_final(x)) out.push_back({Key{2, y, l.initial(), 0}, kSwitch});
  };
  auto goal = [&](const Key& s) { return s[0] == 2 && l.is_final(s[1]) && l.is_final(s[2]); };
  auto labels = shortest_labels(Key{0, k.initial(), 0, 0}, succ, goal);
  if (!labels) return std::nullopt;
  Word w;
  for (int x : *labels)
    if (x != kSwitch) w.push_back(x);
  return w;
}

bool is_unambiguous_concat(const Dfa& k, const Dfa& l) { return !ambiguity_witness(k, l).has_value(); }

// ------------------------------------------------------------ expressions

std::string SdExpr::to_string(const Alphabet& a) const {
  switch (kind) {
    case Kind::Empty: return "%";
    case Kind::Letter: return std::string(1, a.symbol(letter));
    case Kind::Intersect: return "capC(" + kids[0]->to_string(a) + ", \"" + c_regex + "\")";
    case Kind::DisjointUnion: return "dunion(" + kids[0]->to_string(a) + ", " + kids[1]->to_string(a) + ")";
    case Kind::UnambiguousConcat: return "uconcat(" + kids[0]->to_string(a) + ", " + kids[1]->to_string(a) + ")";
    case Kind::Star: return "star(" + kids[0]->to_string(a) + ", d=" + std::to_string(delay) + ")";
  }
  return "";
}

namespace {

class SdParser {
 public:
  SdParser(std::string_view s, const Alphabet& a) : s_(s), a_(a) {}

  std::shared_ptr<const SdExpr> parse() {
    std::shared_ptr<const SdExpr> main;
    while (skip(), pos_ < s_.size()) {
      std::size_t save = pos_;
      std::string name = ident();
      skip();
      if (!name.empty() && pos_ < s_.size() && s_[pos_] == '=') {
        ++pos_;
        auto e = expr();
        defs_[name] = e;
        continue;
      }
      pos_ = save;
      if (main) throw ParseError("more than one main expression", pos_);
      main = expr();
    }
    if (!main) throw ParseError("no expression", pos_);
    return main;
  }

 private:
  void skip() {
    for (;;) {
      while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
        continue;
      }
      return;
    }
  }
  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  std::string ident() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return std::string(s_.substr(b, pos_ - b));
  }
  std::size_t number() {
    skip();
    std::size_t b = pos_, v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) v = v * 10 + (s_[pos_++] - '0');
    if (b == pos_) throw ParseError("expected a number", pos_);
    return v;
  }
  std::string quoted() {
    expect('"');
    std::size_t b = pos_;
    while (pos_ < s_.size() && s_[pos_] != '"') ++pos_;
    if (pos_ >= s_.size()) throw ParseError("unterminated string", b);
    return std::string(s_.substr(b, pos_++ - b));
  }

  std::shared_ptr<const SdExpr> expr() {
    skip();
    auto e = std::make_shared<SdExpr>();
    e->offset = pos_;
    if (pos_ < s_.size() && s_[pos_] == '%') {
      ++pos_;
      return e;
    }
    std::string id = ident();
    if (id.empty()) throw ParseError("expected an SD expression", pos_);
    using K = SdExpr::Kind;
    if (id == "star") {
      e->kind = K::Star;
      expect('(');
      e->kids.push_back(expr());
      expect(',');
      if (ident() != "d") throw ParseError("expected 'd='", pos_);
      expect('=');
      e->delay = number();
      if (e->delay == 0) throw ParseError("declared delay must be at least 1", pos_);
      expect(')');
    } else if (id == "uconcat" || id == "dunion") {
      e->kind = id == "uconcat" ? K::UnambiguousConcat : K::DisjointUnion;
      expect('(');
      e->kids.push_back(expr());
      expect(',');
      e->kids.push_back(expr());
      expect(')');
    } else if (id == "capC") {
      e->kind = K::Intersect;
      expect('(');
      e->kids.push_back(expr());
      expect(',');
      e->c_regex = quoted();
      parse_regex(e->c_regex, a_);  // early syntax check
      expect(')');
    } else if (id.size() == 1 && a_.find(id[0])) {
      e->kind = K::Letter;
      e->letter = *a_.find(id[0]);
    } else if (auto it = defs_.find(id); it != defs_.end()) {
      return it->second;
    } else {
      throw ParseError("unknown name '" + id + "'", e->offset);
    }
    return e;
  }

  std::string_view s_;
  const Alphabet& a_;
  std::size_t pos_ = 0;
  std::map<std::string, std::shared_ptr<const SdExpr>> defs_;
};

std::string short_form(const SdExpr& e, const Alphabet& a) {
  std::string s = e.to_string(a);
  if (s.size() > 80) s = s.substr(0, 77) + "...";
  return s;
}

Dfa validate_node(const SdExpr& e, const Alphabet& a, const ClassSelector& c, const Config& cfg,
                  std::vector<SdViolation>& out) {
  using K = SdExpr::Kind;
  auto violation = [&](std::string msg, std::string witness) {
    out.push_back({e.offset, short_form(e, a), std::move(msg), std::move(witness)});
  };
  auto show = [&](const Word& w) { return w.empty() ? std::string("_") : a.decode(w); };
  switch (e.kind) {
    case K::Empty: return empty_language(a);
    case K::Letter: return letter_language(a, e.letter);
    case K::Intersect: {
      Dfa x = validate_node(*e.kids[0], a, c, cfg, out);
      Dfa cl = compile(e.c_regex, a);
      if (!in_base_class(c, cl, cfg)) violation("language \"" + e.c_regex + "\" is not in the base class", "");
      return minimize(product(x, cl, BoolOp::Intersection));
    }
    case K::DisjointUnion: {
      Dfa x = validate_node(*e.kids[0], a, c, cfg, out);
      Dfa y = validate_node(*e.kids[1], a, c, cfg, out);
      if (auto w = common_word(x, y)) violation("not disjoint", show(*w));
      return minimize(product(x, y, BoolOp::Union));
    }
    case K::UnambiguousConcat: {
      Dfa x = validate_node(*e.kids[0], a, c, cfg, out);
      Dfa y = validate_node(*e.kids[1], a, c, cfg, out);
      if (auto w = ambiguity_witness(x, y)) violation("ambiguous concatenation", show(*w));
      return concat(x, y);
    }
    case K::Star: {
      Dfa x = validate_node(*e.kids[0], a, c, cfg, out);
      if (auto w = prefix_code_violation(x)) {
        violation("not a prefix code", show(*w));
      } else if (auto t = sync_delay_witness(x, e.delay)) {
        violation("synchronization delay " + std::to_string(e.delay) + " fails",
                  show(t->u) + "|" + show(t->v) + "|" + show(t->w));
      }
      return star(x);
    }
  }
  return empty_language(a);
}

}  // namespace

std::shared_ptr<const SdExpr> parse_sd_expression(std::string_view text, const Alphabet& alphabet) {
  return SdParser(text, alphabet).parse();
}

SdValidation validate_sd_expression(const SdExpr& e, const Alphabet& alphabet, const ClassSelector& c,
                                    const Config& cfg) {
  SdValidation v;
  v.dfa = minimize(validate_node(e, alphabet, c, cfg, v.violations));
  return v;
}

}  // namespace sfc
