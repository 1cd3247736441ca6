#include "sfc/membership.hpp"

#include <stdexcept>

namespace sfc {

namespace {

void check_witness(const FiniteMonoid& m, Element x) {
  Element w = idempotent_power(m, x);
  if (m.mul(w, x) == w) throw std::logic_error("membership witness does not violate aperiodicity");
}

}  // namespace

MembershipVerdict sf_membership_finite(const FinitePrevariety& c, const Dfa& lang, const Config& cfg) {
  auto l = syntactic_morphism(lang, cfg);
  const auto& alpha = l.morphism;
  const auto& m = alpha.monoid();
  MembershipVerdict v;
  v.monoid_size = m.size();
  v.answer = true;
  auto pairs = c_pairs(c, alpha, cfg);
  for (Element e : idempotents(m)) {
    auto orbit = c_orbit(pairs, alpha, e);
    if (v.answer)
      if (auto x = aperiodicity_witness(m, orbit)) {
        check_witness(m, *x);
        v.answer = false;
        v.witness = x;
      }
    v.orbits.emplace(e, std::move(orbit));
  }
  return v;
}

MembershipVerdict sf_membership_group(GroupClass g, const Dfa& lang, const Config& cfg) {
  auto l = syntactic_morphism(lang, cfg);
  const auto& m = l.morphism.monoid();
  MembershipVerdict v;
  v.monoid_size = m.size();
  v.kernel = group_kernel(g, l.morphism, cfg);
  auto x = aperiodicity_witness(m, v.kernel);
  v.answer = !x.has_value();
  if (x) {
    check_witness(m, *x);
    v.witness = x;
  }
  return v;
}

MembershipVerdict sf_membership(const ClassSelector& c, const Dfa& lang, const Config& cfg) {
  if (const auto* fp = std::get_if<FinitePrevariety>(&c)) return sf_membership_finite(*fp, lang, cfg);
  return sf_membership_group(std::get<GroupClass>(c), lang, cfg);
}

bool schutzenberger_check(const Dfa& lang, const Config& cfg) {
  return is_aperiodic(syntactic_morphism(lang, cfg).morphism.monoid());
}

}  // namespace sfc
