#pragma once

#include <json.hpp>

#include "sfc/covering.hpp"
#include "sfc/membership.hpp"
#include "sfc/sd.hpp"
#include "sfc/semiring.hpp"

namespace sfc {

using json = nlohmann::json;

json to_json(const Dfa& d);
Dfa dfa_from_json(const json& j);

// {"size","identity","mul","letters":{symbol:element}}; accepting is optional.
json to_json(const Morphism& m);
json to_json(const RecognizedLanguage& l);
// Alphabet = letter keys in sorted order. Validates associativity.
Morphism morphism_from_json(const json& j, std::size_t cap = 4096);
Morphism load_morphism(const std::string& path, std::size_t cap = 4096);

// Table semirings: {"size","add","mul","zero","one"}; validated.
IdempotentSemiring semiring_from_json(const json& j);
// Powerset components are sorted element lists; products are arrays.
json value_to_json(const IdempotentSemiring& r, Value v);

json to_json(const MembershipVerdict& v);
json to_json(const CoverResult& r, const IdempotentSemiring& semiring, bool trace);
json to_json(const SdViolation& v);

}  // namespace sfc
