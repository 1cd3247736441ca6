// sfc: command-line front end. Prints one JSON document on stdout.
// Exit codes: 0 computed, 2 input error, 3 resource cap exceeded.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sfc/json_io.hpp"
#include "sfc/ltl.hpp"

using namespace sfc;

namespace {

constexpr int kInputError = 2;
constexpr int kResourceError = 3;

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct Common {
  std::string config_path;
  bool trace = false;
  std::string alphabet;

  Config config() const {
    Config c = config_path.empty() ? Config{} : Config::from_file(config_path);
    if (trace) c.trace = true;
    return c;
  }
  Alphabet alpha() const {
    if (alphabet.empty()) throw InputError("--alphabet is required");
    return Alphabet(alphabet);
  }
};

ClassSelector parse_class(const std::string& s, const Alphabet& a, const Config& cfg) {
  if (s == "st") return FinitePrevariety::st(a);
  if (s == "at") return FinitePrevariety::alphabet_testable(a);
  if (s == "mod") return GroupClass::Mod;
  if (s == "amt") return GroupClass::Amt;
  if (s == "gr") return GroupClass::Gr;
  if (s.rfind("finite:", 0) == 0) {
    auto eta = load_morphism(s.substr(7), cfg.monoid_cap);
    if (!(eta.alphabet() == a))
      throw InputError("class morphism alphabet '" + eta.alphabet().symbols() + "' differs from '" + a.symbols() + "'");
    return FinitePrevariety{eta};
  }
  throw InputError("unknown class '" + s + "' (expected st, at, mod, amt, gr or finite:<morphism.json>)");
}

json pairs_json(const PairSet& p) {
  json arr = json::array();
  for (auto [s, t] : p.pairs()) arr.push_back({s, t});
  return arr;
}

std::string word_or_eps(const Alphabet& a, const Word& w) { return a.decode(w); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Star-free closure toolkit: membership, separation and covering for SF(C)"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--config", common.config_path, "key = value file overriding caps");
  app.add_flag("--trace", common.trace, "include saturation traces");
  app.add_option("--alphabet", common.alphabet, "alphabet symbols in order, e.g. ab");

  std::function<json()> action;

  // regex
  auto* regex = app.add_subcommand("regex", "compile a regex to its minimal complete DFA");
  std::string regex_text;
  std::vector<std::string> regex_words;
  regex->add_option("regex", regex_text, "regular expression")->required();
  regex->add_option("--word", regex_words, "words to test for acceptance");
  regex->callback([&] {
    action = [&] {
      auto a = common.alpha();
      Dfa d = compile(regex_text, a);
      json j = to_json(d);
      if (!regex_words.empty()) {
        json acc = json::object();
        for (const auto& w : regex_words) acc[w] = d.accepts(w);
        j["accepts"] = acc;
      }
      return j;
    };
  });

  // monoid
  auto* monoid = app.add_subcommand("monoid", "syntactic monoid of a regular language");
  std::string lang;
  monoid->add_option("--lang", lang, "regular expression")->required();
  monoid->callback([&] {
    action = [&] {
      auto cfg = common.config();
      auto l = syntactic_morphism(compile(lang, common.alpha()), cfg);
      json j = to_json(l);
      j["idempotents"] = idempotents(l.morphism.monoid());
      j["aperiodic"] = is_aperiodic(l.morphism.monoid());
      j["group"] = is_group(l.morphism.monoid());
      return j;
    };
  });

  // Morphism input shared by kernel and orbits.
  std::string morphism_path, kernel_lang, class_name;
  auto input_morphism = [&](const Config& cfg) -> Morphism {
    if (!morphism_path.empty() && !kernel_lang.empty()) throw InputError("give either --morphism or --lang");
    if (!morphism_path.empty()) return load_morphism(morphism_path, cfg.monoid_cap);
    if (kernel_lang.empty()) throw InputError("--morphism or --lang is required");
    return syntactic_morphism(compile(kernel_lang, common.alpha()), cfg).morphism;
  };

  auto* kernel = app.add_subcommand("kernel", "group kernel (mod, amt, gr) of a morphism");
  kernel->add_option("--class", class_name, "mod, amt or gr")->required();
  kernel->add_option("--morphism", morphism_path, "morphism JSON file");
  kernel->add_option("--lang", kernel_lang, "regex; uses its syntactic morphism");
  kernel->callback([&] {
    action = [&] {
      auto cfg = common.config();
      auto alpha = input_morphism(cfg);
      auto sel = parse_class(class_name, alpha.alphabet(), cfg);
      const auto* g = std::get_if<GroupClass>(&sel);
      if (!g) throw InputError("kernel needs a group class (mod, amt, gr)");
      json j;
      if (*g == GroupClass::Mod) {
        auto mk = mod_kernel_with_index(alpha, cfg);
        j["kernel"] = mk.kernel;
        j["stability_index"] = mk.stability_index;
      } else {
        j["kernel"] = group_kernel(*g, alpha, cfg);
      }
      return j;
    };
  });

  auto* orbits = app.add_subcommand("orbits", "C-pairs and C-orbits for a finite prevariety");
  orbits->add_option("--class", class_name, "st, at or finite:<morphism.json>")->required();
  orbits->add_option("--morphism", morphism_path, "morphism JSON file");
  orbits->add_option("--lang", kernel_lang, "regex; uses its syntactic morphism");
  orbits->callback([&] {
    action = [&] {
      auto cfg = common.config();
      auto alpha = input_morphism(cfg);
      auto sel = parse_class(class_name, alpha.alphabet(), cfg);
      const auto* fp = std::get_if<FinitePrevariety>(&sel);
      if (!fp) throw InputError("orbits needs a finite prevariety (st, at, finite:<file>)");
      auto pairs = c_pairs(*fp, alpha, cfg);
      json o = json::object();
      for (Element e : idempotents(alpha.monoid()))
        if (alpha.in_image(e)) o[std::to_string(e)] = c_orbit(pairs, alpha, e);
      return json{{"pairs", pairs_json(pairs)}, {"orbits", o}};
    };
  });

  // membership
  auto* membership = app.add_subcommand("membership", "decide L in SF(C)");
  std::string member_lang;
  membership->add_option("--class", class_name, "st, at, mod, amt, gr or finite:<file>")->required();
  std::vector<Element> member_accept;
  membership->add_option("--lang", member_lang, "regular expression");
  membership->add_option("--morphism", morphism_path, "morphism JSON file; the language is given by --accept");
  membership->add_option("--accept", member_accept, "accepting elements for --morphism")->delimiter(',');
  membership->callback([&] {
    action = [&] {
      auto cfg = common.config();
      if (!morphism_path.empty()) {
        if (!member_lang.empty()) throw InputError("give either --lang or --morphism");
        auto alpha = load_morphism(morphism_path, cfg.monoid_cap);
        std::vector<bool> acc(alpha.monoid().size());
        for (Element e : member_accept) {
          if (e >= acc.size()) throw InputError("accepting element " + std::to_string(e) + " out of range");
          acc[e] = true;
        }
        auto d = recognized_dfa(alpha, acc);
        return to_json(sf_membership(parse_class(class_name, d.alphabet(), cfg), d, cfg));
      }
      if (member_lang.empty()) throw InputError("--lang or --morphism is required");
      auto a = common.alpha();
      return to_json(sf_membership(parse_class(class_name, a, cfg), compile(member_lang, a), cfg));
    };
  });

  // separate / cover
  std::vector<std::string> langs;
  auto cover_action = [&](bool separate) {
    return [&, separate] {
      auto cfg = common.config();
      auto a = common.alpha();
      if (separate && langs.size() != 2) throw InputError("separate needs exactly two languages");
      if (!separate && langs.size() < 2) throw InputError("cover needs L0 and at least one more language");
      auto sel = parse_class(class_name, a, cfg);
      std::vector<Dfa> rest;
      for (std::size_t i = 1; i < langs.size(); ++i) rest.push_back(compile(langs[i], a));
      auto res = is_coverable(sel, compile(langs[0], a), rest, cfg);
      return to_json(res, res.opt.semiring(), cfg.trace);
    };
  };
  auto* separate = app.add_subcommand("separate", "decide SF(C)-separability of two languages");
  separate->add_option("--class", class_name, "st, at, mod, amt, gr or finite:<file>")->required();
  separate->add_option("langs", langs, "two regular expressions")->required();
  separate->callback([&] { action = cover_action(true); });
  auto* cover = app.add_subcommand("cover", "decide SF(C)-coverability of (L0, {L1..Ln})");
  cover->add_option("--class", class_name, "st, at, mod, amt, gr or finite:<file>")->required();
  cover->add_option("langs", langs, "L0 L1 ... Ln as regular expressions")->required();
  cover->callback([&] { action = cover_action(false); });

  // sd
  auto* sd = app.add_subcommand("sd", "SD expressions and synchronization delay");
  sd->require_subcommand(1);
  auto* sd_validate = sd->add_subcommand("validate", "check an SD expression file");
  std::string sd_file, sd_class = "st";
  sd_validate->add_option("file", sd_file, "SD expression file")->required();
  sd_validate->add_option("--class", sd_class, "base class for capC (default st)");
  sd_validate->callback([&] {
    action = [&] {
      auto cfg = common.config();
      auto a = common.alpha();
      auto e = parse_sd_expression(read_file(sd_file), a);
      auto sel = parse_class(sd_class, a, cfg);
      auto v = validate_sd_expression(*e, a, sel, cfg);
      json j;
      j["ok"] = v.ok();
      json vs = json::array();
      for (const auto& x : v.violations) vs.push_back(to_json(x));
      j["violations"] = vs;
      if (v.ok()) j["dfa"] = to_json(v.dfa);
      return j;
    };
  });
  auto* sd_delay = sd->add_subcommand("delay", "least synchronization delay up to dmax");
  std::string delay_regex;
  std::size_t dmax = 0;
  sd_delay->add_option("regex", delay_regex, "regular expression for K")->required();
  sd_delay->add_option("--dmax", dmax, "largest delay to try (default delay_dmax)");
  sd_delay->callback([&] {
    action = [&] {
      auto cfg = common.config();
      auto a = common.alpha();
      Dfa k = compile(delay_regex, a);
      json j;
      auto bad = prefix_code_violation(k);
      j["prefix_code"] = !bad.has_value();
      if (bad) {
        j["violation"] = word_or_eps(a, *bad);
        j["delay"] = nullptr;
        return j;
      }
      std::size_t bound = dmax ? dmax : cfg.delay_dmax;
      auto d = min_sync_delay(k, bound);
      j["delay"] = d ? json(*d) : json(nullptr);
      j["dmax"] = bound;
      std::size_t wd = d ? *d - 1 : bound;
      if (wd >= 1)
        if (auto w = sync_delay_witness(k, wd))
          j["witness"] = {{"d", wd}, {"u", a.decode(w->u)}, {"v", a.decode(w->v)}, {"w", a.decode(w->w)}};
      return j;
    };
  });

  // ltl
  auto* ltl = app.add_subcommand("ltl", "evaluate LTL(C) formulas");
  ltl->require_subcommand(1);
  std::string formula_file, ltl_word, ltl_lang;
  std::size_t maxlen = 8;
  auto* ltl_eval = ltl->add_subcommand("eval", "evaluate a formula on a word");
  ltl_eval->add_option("--formula", formula_file, "formula file")->required();
  ltl_eval->add_option("--word", ltl_word, "input word")->required();
  ltl_eval->callback([&] {
    action = [&] {
      auto a = common.alpha();
      auto f = parse_ltl(read_file(formula_file), a);
      Word w = a.encode(ltl_word);
      auto all = eval_all(*f, w);
      return json{{"answer", static_cast<bool>(all[0])}, {"positions", std::vector<bool>(all.begin(), all.end())}};
    };
  });
  auto* ltl_cmp = ltl->add_subcommand("compare", "compare a formula with a regex on all short words");
  ltl_cmp->add_option("--formula", formula_file, "formula file")->required();
  ltl_cmp->add_option("--lang", ltl_lang, "regular expression")->required();
  ltl_cmp->add_option("--maxlen", maxlen, "maximal word length (default 8)");
  ltl_cmp->callback([&] {
    action = [&] {
      auto a = common.alpha();
      auto f = parse_ltl(read_file(formula_file), a);
      auto bad = compare_sampled(*f, compile(ltl_lang, a), maxlen);
      json ws = json::array();
      for (const auto& w : bad) ws.push_back(a.decode(w));
      return json{{"mismatches", ws}, {"count", bad.size()}, {"maxlen", maxlen}};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    json out = action();
    std::cout << out.dump() << "\n";
    return 0;
  } catch (const InputError& e) {
    std::cout << json{{"error", e.what()}, {"kind", "input"}}.dump() << "\n";
    return kInputError;
  } catch (const ResourceError& e) {
    std::cout << json{{"error", e.what()}, {"kind", "resource"}}.dump() << "\n";
    return kResourceError;
  }
}
