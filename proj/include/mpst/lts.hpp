#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "mpst/syntax.hpp"

namespace mpst {

/// Rule Comm. Returns none when `a` is not enabled in `n`.
std::optional<Network> step_network(const Network& n, const Communication& a);

/// Rules Ecomm and Icomm. Icomm fires only when every branch can step.
std::optional<GlobalType> step_global(const GlobalType& g, const Communication& a);

std::vector<std::pair<Communication, Network>> transitions(const Network& n);
std::vector<std::pair<Communication, GlobalType>> transitions(const GlobalType& g);

/// Non-empty traces of length at most `depth`.
std::set<Trace> traces_of(const Network& n, std::size_t depth);
std::set<Trace> traces_of(const GlobalType& g, std::size_t depth);

struct TraceEquivalence {
  bool equivalent = true;
  /// Least trace (in trace order) of the symmetric difference.
  std::optional<Trace> witness;
  /// Which side produced the witness.
  bool witness_in_global = false;
};

TraceEquivalence trace_equivalent(const GlobalType& g, const Network& n, std::size_t depth);

/// True iff no state reachable within `depth` steps has two distinct
/// successors under the same communication.
bool lts_deterministic(const GlobalType& g, std::size_t depth);
bool lts_deterministic(const Network& n, std::size_t depth);

/// Canonical key of an LTS state.
std::string state_key(const GlobalType& g);
std::string state_key(const Network& n);

}  // namespace mpst
