// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>

#include "sfc/covering.hpp"
#include "sfc/error.hpp"
#include "sfc/ltl.hpp"
#include "sfc/membership.hpp"
#include "sfc/sd.hpp"
#include "support.hpp"

using namespace sfc;
using namespace sfc::testing;

namespace {

const Alphabet A1("a");

// Collects failed checks for one criterion.
struct Report {
  std::vector<std::string> failures;
  std::string note;
  void check(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

bool witness_ok(const Dfa& d, const MembershipVerdict& v) {
  if (!v.witness) return false;
  auto m = syntactic_morphism(d).morphism.monoid();
  Element w = idempotent_power(m, *v.witness);
  return m.mul(w, *v.witness) != w;
}

Dfa s3_fiber() {
  std::vector<bool> acc(6);
  acc[0] = true;
  return recognized_dfa(s3_morphism(), acc);
}

bool subset(const std::vector<Element>& x, const std::vector<Element>& y) {
  return std::includes(y.begin(), y.end(), x.begin(), x.end());
}

Value bits(std::initializer_list<Element> xs) {
  Value v = 0;
  for (auto x : xs) v |= Value{1} << x;
  return v;
}

const std::vector<Dfa>& corpus() {
  static const std::vector<Dfa> c = dfa_corpus(220, 6, 12);
  return c;
}

void criterion1(Report& r) {
  auto st = FinitePrevariety::st(ab());
  r.check(sf_membership(st, compile("(ab)*", ab())).answer, "SF(ST) accepts (ab)*");
  r.check(sf_membership(st, compile("(a+b)*a(a+b)*", ab())).answer, "SF(ST) accepts A*aA*");
  auto even = compile("(aa)*", A1);
  auto v = sf_membership(FinitePrevariety::st(A1), even);
  r.check(!v.answer, "SF(ST) rejects (aa)*");
  r.check(!v.answer && witness_ok(even, v), "rejection witness is not aperiodic");
  r.check(sf_membership(GroupClass::Mod, compile("(aa)*", A1)).answer, "SF(MOD) accepts (aa)*");
  r.check(sf_membership(GroupClass::Mod, compile("(aa+bb)*", ab())).answer, "SF(MOD) accepts (aa+bb)*");
  auto fiber = s3_fiber();
  auto amt = sf_membership(GroupClass::Amt, fiber);
  r.check(!amt.answer, "SF(AMT) rejects the S3 identity fiber");
  r.check(!amt.answer && witness_ok(fiber, amt), "AMT rejection witness is not aperiodic");
  r.check(sf_membership(GroupClass::Gr, fiber).answer, "SF(GR) accepts the S3 identity fiber");
}

void criterion2(Report& r) {
  auto even = syntactic_morphism(compile("(aa)*", A1)).morphism;
  r.check(mod_kernel(even) == std::vector<Element>{even.monoid().identity()}, "mod_kernel((aa)*) = {1}");
  r.check(gr_kernel(s3_morphism()) == std::vector<Element>{0}, "gr_kernel(S3) = {1}");
  r.check(gr_kernel(parity_a_morphism()) == std::vector<Element>{0}, "gr_kernel(Z/2) = {1}");
  r.check(gr_kernel(even) == std::vector<Element>{even.monoid().identity()}, "gr_kernel((aa)*) = {1}");
  r.check(gr_kernel(one_zero_morphism()) == std::vector<Element>{0, 1}, "gr_kernel({1,z}) = {1,z}");
  r.check(amt_kernel(s3_morphism()) == a3(), "amt_kernel(S3) = A3");
}

void criterion3(Report& r) {
  auto alpha = at_example_morphism();
  auto p = c_pairs(FinitePrevariety::alphabet_testable(ab()), alpha);
  r.check(p.contains(1, 3), "(a,0) is an AT-pair");
  r.check(p.contains(3, 2), "(0,b) is an AT-pair");
  r.check(!p.contains(1, 2), "(a,b) is not an AT-pair");
  r.check(c_orbit(p, alpha, 3) == std::vector<Element>{3}, "orbit of 0 is {0}");
}

void criterion4(Report& r) {
  auto even = compile("(aa)*", A1), odd = compile("a(aa)*", A1);
  r.check(!is_separable(FinitePrevariety::st(A1), even, odd).answer, "ST does not separate (aa)*, a(aa)*");
  r.check(is_separable(GroupClass::Mod, even, odd).answer, "MOD separates (aa)*, a(aa)*");
  auto alpha = syntactic_morphism(even).morphism;
  auto rho = rho_alpha(alpha);
  Element one = alpha.monoid().identity(), g = alpha.letter(0);
  auto st = opt_finite(FinitePrevariety::st(A1), rho).elements();
  std::vector<Value> want_st{0, bits({one}), bits({g}), bits({one, g})};
  std::sort(want_st.begin(), want_st.end());
  r.check(st == want_st, "Opt SF(ST) = {0,{1},{g},{1,g}}");
  auto mod = opt_group(GroupClass::Mod, rho).elements();
  std::vector<Value> want_mod{0, bits({one}), bits({g})};
  std::sort(want_mod.begin(), want_mod.end());
  r.check(mod == want_mod, "Opt SF(MOD) = {0,{1},{g}}");
}

void criterion5(Report& r) {
  const auto& c = corpus();
  r.check(c.size() >= 200, "corpus has at least 200 languages");
  std::size_t max_monoid = 0, disagreements = 0, big = 0;
  std::size_t accepted[3] = {0, 0, 0};
  std::vector<ClassSelector> classes{FinitePrevariety::st(ab()), GroupClass::Mod, GroupClass::Gr};
  const char* names[] = {"ST", "MOD", "GR"};
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::size_t size = syntactic_morphism(c[i]).morphism.monoid().size();
    max_monoid = std::max(max_monoid, size);
    big += size >= 8;
    auto comp = complement(c[i]);
    for (std::size_t k = 0; k < classes.size(); ++k) {
      bool mem = sf_membership(classes[k], c[i]).answer;
      bool sep = is_separable(classes[k], c[i], comp).answer;
      accepted[k] += mem;
      if (mem != sep) {
        ++disagreements;
        r.check(false, std::string(names[k]) + " disagrees on corpus language " + std::to_string(i));
      }
    }
  }
  r.check(max_monoid <= 12, "corpus monoids have at most 12 elements");
  r.note = std::to_string(c.size()) + " languages (" + std::to_string(big) + " with monoid >= 8, max " +
           std::to_string(max_monoid) + "); in SF(ST)/SF(MOD)/SF(GR): " + std::to_string(accepted[0]) + "/" +
           std::to_string(accepted[1]) + "/" + std::to_string(accepted[2]) + "; " + std::to_string(disagreements) +
           " disagreements";
}

void criterion6(Report& r) {
  r.check(is_prefix_code(compile("a*b", ab())), "a*b is a prefix code");
  r.check(!is_prefix_code(compile("a+aa", ab())), "{a,aa} is not a prefix code");
  auto k = compile("(aab)*ab", ab());
  r.check(has_sync_delay(k, 2) && !has_sync_delay(k, 1), "(aab)*ab has delay exactly 2");
  r.check(has_sync_delay(compile("a*b", ab()), 1), "a*b has delay 1");
  r.check(!min_sync_delay(compile("aa", A1), 6).has_value(), "{aa} has no delay up to 6");

  auto codes = random_prefix_codes(100, 4242);
  r.check(codes.size() == 100, "100 random prefix codes");
  std::size_t found = 0;
  for (std::size_t i = 0; i < codes.size(); ++i)
    for (std::size_t d = 1; d <= 2; ++d) {
      auto w = sync_delay_witness(codes[i], d);
      bool shortw = w && w->u.size() + w->v.size() + w->w.size() <= 10;
      bool brute = brute_delay_witness(codes[i], d, 10);
      found += brute;
      r.check(brute == shortw, "brute force disagrees on code " + std::to_string(i) + " d=" + std::to_string(d));
    }

  const char* aabb = R"(
Bs = capC(star(b, d=1), "((a+b)(a+b))*")
As = capC(star(a, d=1), "((a+b)(a+b))*")
Ap = uconcat(uconcat(a, a), As)
Bodd = uconcat(b, Bs)
block = uconcat(uconcat(Bodd, Ap), b)
Z = star(block, d=1)
M = uconcat(uconcat(uconcat(Ap, b), Z), Bodd)
E = star(%, d=1)
uconcat(uconcat(Bs, dunion(E, M)), As))";
  std::vector<std::pair<std::string, ClassSelector>> exprs = {
      {aabb, GroupClass::Mod},
      {"star(uconcat(a, b), d=1)", FinitePrevariety::st(ab())},
      {"uconcat(star(dunion(a, b), d=1), b)", FinitePrevariety::st(ab())},
      {"star(uconcat(star(a, d=1), b), d=2)", FinitePrevariety::st(ab())},
      {"star(uconcat(uconcat(a, a), b), d=1)", FinitePrevariety::st(ab())},
      {"capC(star(dunion(a, b), d=1), \"((a+b)(a+b))*\")", GroupClass::Mod},
      {"uconcat(capC(star(a, d=1), \"(b+ab*a)*\"), b)", GroupClass::Amt},
      {aabb, GroupClass::Gr},
  };
  std::size_t validated = 0;
  for (const auto& [text, cls] : exprs) {
    auto v = validate_sd_expression(*parse_sd_expression(text, ab()), ab(), cls);
    if (!v.ok()) {
      r.check(false, "expression rejected: " + v.violations[0].message);
      continue;
    }
    ++validated;
    r.check(sf_membership(cls, v.dfa).answer, "validated expression not in SF(C)");
  }
  auto first = validate_sd_expression(*parse_sd_expression(aabb, ab()), ab(), GroupClass::Mod);
  r.check(first.ok() && equivalent(first.dfa, compile("(aa+bb)*", ab())), "(aa+bb)* expression denotes (aa+bb)*");
  r.note = std::to_string(found) + " brute-force witnesses, " + std::to_string(validated) + " expressions validated";
}

void criterion7(Report& r) {
  auto ab_f = parse_ltl("and(X(or(a,max)), U(and(implies(a,X(b)),implies(b,X(or(a,max)))), max))", ab());
  auto mod_f = parse_ltl(
      "and(F[((a+b)(a+b))*](max), U(implies(F[((a+b)(a+b))*(a+b)](max), or(and(a,X(a)),and(b,X(b)))), max))", ab());
  r.check(compare_sampled(*ab_f, compile("(ab)*", ab()), 8).empty(), "(ab)* formula");
  r.check(compare_sampled(*mod_f, compile("(aa+bb)*", ab()), 8).empty(), "(aa+bb)* formula");
}

void criterion8(Report& r) {
  std::size_t amt_checked = 0, amt_skipped = 0, mod_checked = 0;
  Config cfg;
  cfg.amt_monoid_cap = 12;
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    auto alpha = syntactic_morphism(corpus()[i]).morphism;
    const auto& m = alpha.monoid();
    auto mk = mod_kernel_with_index(alpha);
    auto gr = gr_kernel(alpha);
    std::optional<std::vector<Element>> amt;
    try {
      amt = amt_kernel(alpha, cfg);
    } catch (const ResourceError&) {
      ++amt_skipped;
    }
    const std::string id = " (corpus " + std::to_string(i) + ")";
    if (amt) {
      r.check(subset(gr, *amt), "gr not in amt" + id);
      r.check(subset(*amt, mk.kernel), "amt not in mod" + id);
      if (m.size() <= 8) {
        ++amt_checked;
        for (std::size_t q = 1; q <= 12; ++q)
          r.check(subset(*amt, amt_kernel_modular(alpha, q)), "modular check q=" + std::to_string(q) + id);
      }
    } else {
      r.check(subset(gr, mk.kernel), "gr not in mod" + id);
    }
    // alpha(A^n) for n <= 4d by iteration.
    const std::size_t d = mk.stability_index;
    std::vector<std::vector<bool>> layer{std::vector<bool>(m.size())};
    layer[0][m.identity()] = true;
    for (std::size_t n = 1; n <= 4 * d; ++n) {
      std::vector<bool> next(m.size());
      for (Element s = 0; s < m.size(); ++s)
        if (layer.back()[s])
          for (Element l : alpha.letters()) next[m.mul(s, l)] = true;
      layer.push_back(std::move(next));
    }
    // Kernel = {1} + alpha(A^d); d = least e >= 1 with alpha(A^e) = alpha(A^2e).
    std::vector<Element> brute;
    for (Element s = 0; s < m.size(); ++s) {
      bool in = s == m.identity();
      for (std::size_t n = d; n <= 4 * d; n += d) in = in || layer[n][s];
      if (in) brute.push_back(s);
    }
    r.check(brute == mk.kernel, "mod kernel vs brute force" + id);
    std::size_t least = 1;
    while (layer[least] != layer[2 * least]) ++least;
    r.check(least == d, "stability index vs brute force" + id);
    ++mod_checked;
  }
  r.note = std::to_string(amt_checked) + " morphisms modular-checked, " + std::to_string(mod_checked) +
           " mod indices brute-forced, " + std::to_string(amt_skipped) + " AMT kernels over the cap";
}

void criterion9(Report& r) {
  std::size_t checked = 0;
  std::vector<FinitePrevariety> finite{FinitePrevariety::st(ab()), FinitePrevariety::alphabet_testable(ab())};
  const auto& c = corpus();
  for (std::size_t i = 0; i < c.size(); i += 2) {
    auto inst = reduce_cover_instance(c[i], {complement(c[i])});
    const std::string id = " (corpus " + std::to_string(i) + ")";
    for (const auto& f : finite) {
      auto s = saturate_finite(f, inst.rho);
      r.check(is_pointed_closed(f, inst.rho, s), "pointed saturation not closed" + id);
      ++checked;
    }
    for (auto g : {GroupClass::Mod, GroupClass::Gr}) {
      auto s = saturate_group(g, inst.rho);
      r.check(is_complete_closed(g, inst.rho, s.elements), "complete saturation not closed" + id);
      ++checked;
    }
  }
  r.note = std::to_string(checked) + " saturations re-checked";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<void(Report&)> run;
  };
  const std::vector<Criterion> all = {
      {1, "membership goldens", criterion1},
      {2, "kernel goldens", criterion2},
      {3, "pairs and orbits golden", criterion3},
      {4, "covering and separation goldens", criterion4},
      {5, "membership equals separation from the complement on the corpus", criterion5},
      {6, "prefix codes, synchronization delay and SD expressions", criterion6},
      {7, "LTL formulas match their languages up to length 8", criterion7},
      {8, "kernel oracle cross-checks", criterion8},
      {9, "saturation outputs are closed", criterion9},
  };
  int failed = 0;
  auto start = std::chrono::steady_clock::now();
  for (const auto& c : all) {
    Report r;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(r);
    } catch (const std::exception& e) {
      r.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = r.failures.empty();
    failed += !ok;
    std::printf("[%s] criterion %d: %s (%.2fs%s%s)\n", ok ? "PASS" : "FAIL", c.id, c.title, secs,
                r.note.empty() ? "" : "; ", r.note.c_str());
    for (std::size_t i = 0; i < r.failures.size() && i < 10; ++i) std::printf("    %s\n", r.failures[i].c_str());
    if (r.failures.size() > 10) std::printf("    ... %zu more\n", r.failures.size() - 10);
  }
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%zu criteria passed in %.2fs\n", static_cast<int>(all.size()) - failed, all.size(), total);
  return failed ? 1 : 0;
}
