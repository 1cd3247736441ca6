#pragma once

#include <map>
#include <optional>
#include <vector>

#include "sfc/oracles.hpp"

namespace sfc {

struct MembershipVerdict {
  bool answer = false;
  // On reject: x with x^(w+1) != x^w.
  std::optional<Element> witness;
  std::size_t monoid_size = 0;
  // Group classes: the kernel. Finite prevarieties: idempotent -> orbit.
  std::vector<Element> kernel;
  std::map<Element, std::vector<Element>> orbits;
};

MembershipVerdict sf_membership_finite(const FinitePrevariety& c, const Dfa& lang, const Config& cfg = {});
MembershipVerdict sf_membership_group(GroupClass g, const Dfa& lang, const Config& cfg = {});
MembershipVerdict sf_membership(const ClassSelector& c, const Dfa& lang, const Config& cfg = {});
bool schutzenberger_check(const Dfa& lang, const Config& cfg = {});

}  // namespace sfc
