#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sfc/oracles.hpp"
#include "sfc/semiring.hpp"

namespace sfc {

// rho = product of rho_alpha_i; F = {(X_0..X_n) : X_i meets F_i for all i}.
struct CoverInstance {
  RatingMap rho;
  std::vector<std::uint64_t> accepting;  // F_i as a bitset, per component
  bool in_bad_set(Value x) const;
  bool bad_set_empty() const;
};

CoverInstance reduce_cover_instance(const Dfa& l0, const std::vector<Dfa>& ls, const Config& cfg = {});

struct TraceEntry {
  std::size_t round = 0;
  std::string rule;
  std::optional<Element> point;  // the N_C component, pointed saturation only
  Value value = 0;
};

// Downward closed subset of N_C x R, one antichain per N_C element.
struct PointedSaturation {
  std::map<Element, DownSet> elements;
  std::size_t rounds = 0;
  std::vector<TraceEntry> trace;
  bool contains(Element n, Value r) const;
};

struct CompleteSaturation {
  DownSet elements;
  std::size_t rounds = 0;
  std::vector<TraceEntry> trace;
};

PointedSaturation saturate_finite(const FinitePrevariety& c, const RatingMap& rho, const Config& cfg = {});
CompleteSaturation saturate_group(GroupClass g, const RatingMap& rho, const Config& cfg = {});
DownSet opt_finite(const FinitePrevariety& c, const RatingMap& rho, const Config& cfg = {});
DownSet opt_group(GroupClass g, const RatingMap& rho, const Config& cfg = {});

// One G-operation: the union of the kernel of the monoid generated by the
// downsets of {s rho(a) s' : s, s' in S}. Returned as maxima.
std::vector<Value> g_operation(GroupClass g, const RatingMap& rho, const DownSet& s, const Config& cfg = {});

// Re-applies every closure rule to a saturation result; true iff nothing new.
bool is_pointed_closed(const FinitePrevariety& c, const RatingMap& rho, const PointedSaturation& s,
                       const Config& cfg = {});
bool is_complete_closed(GroupClass g, const RatingMap& rho, const DownSet& s, const Config& cfg = {});

struct CoverResult {
  bool answer = false;
  DownSet opt;
  std::size_t rounds = 0;
  std::vector<TraceEntry> trace;
};

CoverResult is_coverable(const ClassSelector& c, const Dfa& l0, const std::vector<Dfa>& ls, const Config& cfg = {});
CoverResult is_separable(const ClassSelector& c, const Dfa& l1, const Dfa& l2, const Config& cfg = {});

}  // namespace sfc
