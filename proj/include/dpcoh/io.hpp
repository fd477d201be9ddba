#pragma once
#include <string>

#include "json.hpp"
#include "dpcoh/finalg.hpp"
#include "dpcoh/necklace.hpp"

namespace dpcoh {

using njson = nlohmann::ordered_json;

// {"vertices":["v"],"arrows":[{"name":"x","tail":"v","head":"v"}]}
// Star names are generated, never read from input.
njson quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const njson& j);

// Necklace terms: {"coeff":"-1/2","word":["x","*x","x","*y"]}; an empty word
// needs "vertex" on multi-vertex quivers. Input words may be any closed
// rotation; they canonicalize on load.
njson polyfield_to_json(const Quiver& q, const PolyField& f);
PolyField polyfield_from_json(const Quiver& q, const njson& terms);

// A field document bundles the quiver with the terms.
struct FieldDoc {
  Quiver quiver;
  PolyField field;
};
njson fielddoc_to_json(const Quiver& q, const PolyField& f);
FieldDoc fielddoc_from_json(const njson& j);

// {"n":2,"names":["x","y"],"products":[{"i":"x","j":"y","out":{"y":"1"}}]}
njson algebra_to_json(const StructureConstants& c);
StructureConstants algebra_from_json(const njson& j);

std::string read_file(const std::string& path);  // throws ValidationError
std::uint64_t fnv1a64(const std::string& bytes);
std::string hash_hex(std::uint64_t h);

}  // namespace dpcoh
