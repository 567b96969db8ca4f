#pragma once

#include <string>

#include "json.hpp"
#include "mpst/event_structure.hpp"

namespace mpst {

/// Events as trace strings, causality as its covering pairs and conflict as
/// its minimal pairs; "hereditary_closure" marks that the full conflict is
/// the hereditary closure of the listed pairs.
nlohmann::json to_json(const PrimeES& s);

/// Inverse of to_json. Throws std::invalid_argument on malformed input.
PrimeES pes_from_json(const nlohmann::json& j);

/// Covering causality as solid arrows, initial conflicts as dashed edges.
std::string to_dot(const PrimeES& s);

/// Causality covering pairs and minimal conflicts, by index.
std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(const PrimeES& s);
std::vector<std::pair<std::size_t, std::size_t>> minimal_conflicts(const PrimeES& s);

}  // namespace mpst
