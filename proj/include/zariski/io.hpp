#pragma once

#include "zariski/arrangement.hpp"
#include "zariski/character.hpp"
#include "zariski/combinatorics.hpp"
#include "zariski/invariant.hpp"
#include "zariski/wiring.hpp"

#include <json.hpp>

#include <string>

namespace zariski {

using Json = nlohmann::ordered_json;

Json to_json(const Combinatorics& c);
Combinatorics combinatorics_from_json(const Json& j);

Json to_json(const Arrangement& a);
Arrangement arrangement_from_json(const Json& j);

Json to_json(const Character& xi);
Character character_from_json(const Json& j);

Json to_json(const TriangleCycle& g);
TriangleCycle cycle_from_json(const Json& j);

Json to_json(const AutGroup& g);
Json to_json(const Orbits& o);
Json to_json(const InnerCyclicReport& r);

// Positions are 1-based from the top.
Json to_json(const WiringDiagram& w);

// {"value_exponent", "order", "paths_checked", "crossing_columns", ...}
Json to_json(const InvariantResult& r, const TriangleCycle& g);

Json read_json_file(const std::string& path);

// "builtin:NAME" or a JSON file path.
Combinatorics load_combinatorics(const std::string& src);
Arrangement load_arrangement(const std::string& src);
Character load_character(const std::string& src, int n_lines);
TriangleCycle load_cycle(const std::string& src);

}  // namespace zariski
