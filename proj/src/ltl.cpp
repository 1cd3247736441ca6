#include "sfc/ltl.hpp"

#include <cctype>
#include <unordered_map>

#include "sfc/error.hpp"

namespace sfc {

using Ptr = LtlFormula::Ptr;

namespace {

Ptr make(LtlFormula::Kind k, std::vector<Ptr> kids = {}) {
  auto f = std::make_shared<LtlFormula>();
  f->kind = k;
  f->kids = std::move(kids);
  return f;
}

Ptr make_temporal(LtlFormula::Kind k, Dfa l, std::string text, Ptr f, Ptr g) {
  auto x = std::make_shared<LtlFormula>();
  x->kind = k;
  x->lang = std::make_shared<const Dfa>(std::move(l));
  x->lang_text = std::move(text);
  x->kids = {std::move(f), std::move(g)};
  return x;
}

}  // namespace

Ptr LtlFormula::top() { return make(Kind::Top); }
Ptr LtlFormula::bottom() { return negation(top()); }
Ptr LtlFormula::min() { return make(Kind::Min); }
Ptr LtlFormula::max() { return make(Kind::Max); }
Ptr LtlFormula::letter_of(Symbol a) {
  auto f = std::make_shared<LtlFormula>();
  f->kind = Kind::Letter;
  f->letter = a;
  return f;
}
Ptr LtlFormula::negation(Ptr f) { return make(Kind::Not, {std::move(f)}); }
Ptr LtlFormula::conj(Ptr f, Ptr g) { return make(Kind::And, {std::move(f), std::move(g)}); }
Ptr LtlFormula::disj(Ptr f, Ptr g) { return make(Kind::Or, {std::move(f), std::move(g)}); }
Ptr LtlFormula::implies(Ptr f, Ptr g) { return disj(negation(std::move(f)), std::move(g)); }
Ptr LtlFormula::until(Dfa l, std::string text, Ptr f, Ptr g) {
  return make_temporal(Kind::Until, std::move(l), std::move(text), std::move(f), std::move(g));
}
Ptr LtlFormula::since(Dfa l, std::string text, Ptr f, Ptr g) {
  return make_temporal(Kind::Since, std::move(l), std::move(text), std::move(f), std::move(g));
}
Ptr LtlFormula::eventually(Dfa l, std::string text, Ptr g) { return until(std::move(l), std::move(text), top(), std::move(g)); }
Ptr LtlFormula::next(const Alphabet& a, Ptr g) { return until(universal_language(a), "", bottom(), std::move(g)); }

bool LtlFormula::pure_future() const {
  if (kind == Kind::Since) return false;
  for (const auto& k : kids)
    if (!k->pure_future()) return false;
  return true;
}

std::string LtlFormula::to_string(const Alphabet& a) const {
  switch (kind) {
    case Kind::Top: return "top";
    case Kind::Min: return "min";
    case Kind::Max: return "max";
    case Kind::Letter: return std::string(1, a.symbol(letter));
    case Kind::Not: return "!" + kids[0]->to_string(a);
    case Kind::And: return "and(" + kids[0]->to_string(a) + "," + kids[1]->to_string(a) + ")";
    case Kind::Or: return "or(" + kids[0]->to_string(a) + "," + kids[1]->to_string(a) + ")";
    case Kind::Until:
    case Kind::Since: {
      std::string s = kind == Kind::Until ? "U" : "S";
      if (!lang_text.empty()) s += "[" + lang_text + "]";
      return s + "(" + kids[0]->to_string(a) + "," + kids[1]->to_string(a) + ")";
    }
  }
  return "";
}

// ----------------------------------------------------------------- parser

namespace {

class LtlParser {
 public:
  LtlParser(std::string_view s, const Alphabet& a) : s_(s), a_(a) {}

  Ptr parse() {
    Ptr f = formula();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
    return f;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::vector<Ptr> args(std::size_t min_count, std::size_t max_count) {
    expect('(');
    std::vector<Ptr> out{formula()};
    while (peek(',')) {
      ++pos_;
      out.push_back(formula());
    }
    std::size_t at = pos_;
    expect(')');
    if (out.size() < min_count || out.size() > max_count)
      throw ParseError("wrong number of arguments", at);
    return out;
  }

  // Optional [regex]; empty text means A*.
  std::pair<Dfa, std::string> language() {
    if (!peek('[')) return {universal_language(a_), ""};
    std::size_t b = ++pos_;
    while (pos_ < s_.size() && s_[pos_] != ']') ++pos_;
    if (pos_ >= s_.size()) throw ParseError("unterminated '['", b - 1);
    std::string text(s_.substr(b, pos_ - b));
    ++pos_;
    try {
      return {compile(text, a_), text};
    } catch (const ParseError& e) {
      throw ParseError("bad regex in formula", b + e.offset());
    }
  }

  Ptr formula() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("expected a formula", pos_);
    char c = s_[pos_];
    if (c == '!') {
      ++pos_;
      return LtlFormula::negation(formula());
    }
    if (c == '(') {
      ++pos_;
      Ptr f = formula();
      expect(')');
      return f;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string id(s_.substr(start, pos_ - start));
    if (id.empty()) throw ParseError(std::string("unexpected '") + c + "'", start);
    bool call = peek('(') || peek('[');
    if (call) {
      if (id == "not") return LtlFormula::negation(args(1, 1)[0]);
      if (id == "and" || id == "or") {
        auto xs = args(2, 64);
        Ptr f = xs[0];
        for (std::size_t i = 1; i < xs.size(); ++i)
          f = id == "and" ? LtlFormula::conj(f, xs[i]) : LtlFormula::disj(f, xs[i]);
        return f;
      }
      if (id == "implies") {
        auto xs = args(2, 2);
        return LtlFormula::implies(xs[0], xs[1]);
      }
      if (id == "U" || id == "S") {
        auto [l, text] = language();
        auto xs = args(2, 2);
        return id == "U" ? LtlFormula::until(std::move(l), text, xs[0], xs[1])
                         : LtlFormula::since(std::move(l), text, xs[0], xs[1]);
      }
      if (id == "F" || id == "P") {
        auto [l, text] = language();
        auto xs = args(1, 1);
        return id == "F" ? LtlFormula::until(std::move(l), text, LtlFormula::top(), xs[0])
                         : LtlFormula::since(std::move(l), text, LtlFormula::top(), xs[0]);
      }
      if (id == "X" || id == "Y") {
        auto xs = args(1, 1);
        return id == "X" ? LtlFormula::until(universal_language(a_), "", LtlFormula::bottom(), xs[0])
                         : LtlFormula::since(universal_language(a_), "", LtlFormula::bottom(), xs[0]);
      }
    }
    if (id == "top" || id == "true") return LtlFormula::top();
    if (id == "bot" || id == "false") return LtlFormula::bottom();
    if (id == "min") return LtlFormula::min();
    if (id == "max") return LtlFormula::max();
    if (id.size() == 1)
      if (auto sym = a_.find(id[0])) return LtlFormula::letter_of(*sym);
    throw ParseError("unknown identifier '" + id + "'", start);
  }

  std::string_view s_;
  const Alphabet& a_;
  std::size_t pos_ = 0;
};

// Memoized evaluation of all subformulas over one word.
class Evaluator {
 public:
  explicit Evaluator(const Word& w) : w_(w), n_(w.size()) {}

  const std::vector<bool>& eval(const LtlFormula& f) {
    if (auto it = memo_.find(&f); it != memo_.end()) return it->second;
    using K = LtlFormula::Kind;
    std::vector<bool> r(n_ + 2, false);
    switch (f.kind) {
      case K::Top: r.assign(n_ + 2, true); break;
      case K::Min: r[0] = true; break;
      case K::Max: r[n_ + 1] = true; break;
      case K::Letter:
        for (std::size_t i = 1; i <= n_; ++i) r[i] = w_[i - 1] == f.letter;
        break;
      case K::Not: {
        const auto& x = eval(*f.kids[0]);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = !x[i];
        break;
      }
      case K::And:
      case K::Or: {
        const auto x = eval(*f.kids[0]);
        const auto& y = eval(*f.kids[1]);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.kind == K::And ? (x[i] && y[i]) : (x[i] || y[i]);
        break;
      }
      case K::Until:
      case K::Since: {
        const auto p1 = eval(*f.kids[0]);
        const auto& p2 = eval(*f.kids[1]);
        const auto& st = infix_states(*f.lang);
        const Dfa& d = *f.lang;
        auto at = [&](std::size_t j, std::size_t i) { return st[j * (n_ + 2) + i]; };
        for (std::size_t i = 0; i < n_ + 2; ++i) {
          if (f.kind == K::Until) {
            for (std::size_t j = i + 1; j < n_ + 2; ++j) {
              if (p2[j] && d.is_final(at(i, j))) {
                r[i] = true;
                break;
              }
              if (!p1[j]) break;
            }
          } else {
            for (std::size_t j = i; j-- > 0;) {
              if (p2[j] && d.is_final(at(j, i))) {
                r[i] = true;
                break;
              }
              if (!p1[j]) break;
            }
          }
        }
        break;
      }
    }
    return memo_.emplace(&f, std::move(r)).first->second;
  }

 private:
  // st[j * (n+2) + t]: state after reading the infix strictly between j and t (j < t).
  const std::vector<State>& infix_states(const Dfa& d) {
    if (auto it = tables_.find(&d); it != tables_.end()) return it->second;
    const std::size_t m = n_ + 2;
    std::vector<State> st(m * m, d.initial());
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t t = j + 1; t + 1 < m; ++t) st[j * m + t + 1] = d.next(st[j * m + t], w_[t - 1]);
    return tables_.emplace(&d, std::move(st)).first->second;
  }

  const Word& w_;
  std::size_t n_;
  std::unordered_map<const LtlFormula*, std::vector<bool>> memo_;
  std::unordered_map<const Dfa*, std::vector<State>> tables_;
};

}  // namespace

LtlFormula::Ptr parse_ltl(std::string_view text, const Alphabet& alphabet) { return LtlParser(text, alphabet).parse(); }

std::vector<bool> eval_all(const LtlFormula& f, const Word& w) { return Evaluator(w).eval(f); }

bool eval_at(const LtlFormula& f, const Word& w, std::size_t i) {
  if (i > w.size() + 1) throw InputError("position " + std::to_string(i) + " out of range");
  return eval_all(f, w)[i];
}

bool eval_word(const LtlFormula& f, const Word& w) { return eval_at(f, w, 0); }

std::vector<Word> compare_sampled(const LtlFormula& f, const Dfa& d, std::size_t maxlen) {
  std::vector<Word> out;
  for (const auto& w : all_words(d.alphabet().size(), maxlen))
    if (eval_word(f, w) != d.accepts(w)) out.push_back(w);
  return out;
}

}  // namespace sfc
