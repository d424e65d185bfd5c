#pragma once

#include <string>

#include <json.hpp>

#include "latrep/congruence.hpp"
#include "latrep/lattice.hpp"
#include "latrep/poset.hpp"
#include "latrep/report.hpp"

namespace latrep {

// {"elements": [names...], "relations": [[lo, hi], ...]}; any generating set
Poset poset_from_json(const nlohmann::json& j);
nlohmann::json poset_to_json(const Poset& p);

// {"elements": [names...], "covers": [[lo, hi], ...]}
Lattice lattice_from_json(const nlohmann::json& j);
nlohmann::json lattice_to_json(const Lattice& l);

// {"lattice": <id>, "blocks": [[elem, ...], ...]}
nlohmann::json congruence_to_json(const Lattice& l, const Partition& p);

nlohmann::json report_to_json(const VerificationReport& r);
std::string report_to_text(const VerificationReport& r);

// Hasse diagram; ranks by height, anchor elements highlighted, stable ordering
std::string lattice_to_dot(const Lattice& l);

std::string lattice_id(const Lattice& l);

nlohmann::json load_json_file(const std::string& path);  // "-" reads stdin

}  // namespace latrep
