#pragma once

#include <json.hpp>

#include "ce/duality.hpp"
#include "ce/lamination.hpp"
#include "ce/seed.hpp"
#include "ce/tropical.hpp"

namespace ce {

// JSON boundary. Indices are 1-based on the wire (vertices, frozen
// directions, mutation words, lamination segments) and 0-based internally;
// rationals travel as "p" or "p/q" strings; polynomials as arrays of
// {"exp": [...], "coef": ...} in lexicographic term order, where a
// coefficient is either a rational string or {"omega": [[exponent,
// integer], ...]}. Malformed input raises "bad_json".

using Json = nlohmann::json;

Json seed_to_json(const Seed& s);
Seed seed_from_json(const Json& j);

Json pair_to_json(const CompatiblePair& p);
CompatiblePair pair_from_json(const Json& j);

Json triangulation_to_json(const Triangulation& t);
Triangulation triangulation_from_json(const Json& j);

Json lamination_to_json(const DiskLamination& l);
DiskLamination lamination_from_json(const Json& j);

Json trop_point_to_json(const TropPoint& p);
TropPoint trop_point_from_json(const Json& j);

Json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

Json sfrat_to_json(const SFRat& r);
SFRat sfrat_from_json(const Json& j);

Json omega_to_json(const OmegaScalar& c);
OmegaScalar omega_from_json(const Json& j);

// Term list of a quantum torus element; the carrying torus is contextual
// and is not serialized.
Json qtelem_terms_to_json(const QTElem& e);

Json dcf_to_json(const DoubleCanonicalForm& f);

// "1,2,1" with 1-based entries to internal 0-based indices.
std::vector<int> parse_word(const std::string& s);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

} // namespace ce
