#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mpst/event_structure.hpp"

namespace mpst {

/// Causally connected, conflicting and concurrent pairs, over distinct
/// events only.
struct RelationTriple {
  Relation diamond;
  Relation conflict;
  Relation concurrency;
};

RelationTriple relation_triple(const PrimeES& s);

/// True iff every pair of distinct events lies in exactly one of the three
/// relations. Reports the first offending pair.
std::optional<std::pair<std::size_t, std::size_t>> partition_violation(const PrimeES& s);

struct IcuResult {
  bool ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  /// Maximal cliques of the initial-conflict graph with at least two events.
  std::vector<std::vector<std::size_t>> cliques;
};

IcuResult check_icu(const PrimeES& s);

struct ConfigDeterminism {
  bool ok = true;
  Configuration base;
  std::size_t first = 0;
  std::size_t second = 0;
  std::string reason;
};

/// Over configurations X of at most `max_size - 1` events, any two distinct
/// one-event extensions of X differ in their last communication, and
/// non-conflicting ones have disjoint participants.
ConfigDeterminism check_config_determinism(const PrimeES& s, std::size_t max_size);

using Triple = std::array<std::size_t, 3>;

/// Triples (e, e1, e2) with e < e1, e1 # e2 and e2 concurrent with e.
std::vector<Triple> check_asymmetric_confusion(const PrimeES& s);
/// Triples (e, e1, e2) with e1 < e, e1 # e2 and e2 concurrent with e.
std::vector<Triple> check_reverse_confusion(const PrimeES& s);

using Quad = std::array<std::size_t, 4>;

enum class NRelation { Causality, Conflict, Concurrency };
std::string to_string(NRelation r);

struct NCensusEntry {
  NRelation relation;
  std::size_t violations = 0;
  std::optional<Quad> witness;  // least violation in index order
};

struct NFreeReport {
  /// Instance over the covering relation with e1, e3 in initial conflict.
  bool restricted_ok = true;
  std::optional<Quad> restricted_witness;
  /// Full N-freeness for strict causality, conflict and concurrency. Empty
  /// when the census was skipped for exceeding `census_limit` events.
  std::vector<NCensusEntry> census;
  bool census_skipped = false;
};

NFreeReport check_nfree_instance(const PrimeES& s, std::size_t census_limit = 64);

struct Reconstruction {
  bool ok = false;  // false when some principal ideal exceeds the bound
  std::string error;
  /// Prime configurations, one per event, indexed like the input.
  std::vector<Configuration> primes;
  PrimeES pes;
  bool isomorphic = false;
  std::string mismatch;
};

/// Rebuilds a PES from the prime configurations of `s`, with causality as
/// inclusion and conflict as inconsistency.
Reconstruction reconstruct_from_configs(const PrimeES& s, std::size_t max_size);

struct PesComparison {
  bool identical = true;
  std::string difference;
};

/// Literal equality of events and relations. Throws std::invalid_argument
/// on a horizon mismatch.
PesComparison pes_identical(const PrimeES& a, const PrimeES& b);

/// A bijection preserving last communications, causality and conflict.
std::optional<std::vector<std::size_t>> pes_isomorphism(const PrimeES& a, const PrimeES& b);

}  // namespace mpst
