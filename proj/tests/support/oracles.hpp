#pragma once

// Enumerative reference implementations, small inputs only.

#include <cstddef>
#include <set>
#include <vector>

#include "mpst/event_structure.hpp"
#include "mpst/syntax.hpp"

namespace mpst::testing {

/// Closure of {s} under swapping adjacent independent communications.
std::set<Trace> swap_class(const Trace& s);

bool brute_equivalent(const Trace& a, const Trace& b);
/// Least element of swap_class(s).
Trace brute_normal_form(const Trace& s);
bool brute_pointed(const Trace& s);

/// Some member of [b] starts with a member of [a].
bool brute_leq(const Trace& a, const Trace& b);
/// Members s.pql1.s1 of [a] and s.pql2.s2 of [b] with l1 != l2.
bool brute_conflict(const Trace& a, const Trace& b);
/// Members s.pql1 of [a] and s.pql2 of [b] with l1 != l2.
bool brute_initial_conflict(const Trace& a, const Trace& b);

/// Maximum over the members of [s] of the factorization length.
std::size_t brute_sem_depth(const Participant& p, const Trace& s, std::size_t k);

/// ev(s) as the least pointed subtrace ending with last(s) that keeps
/// every earlier communication sharing a participant with a kept one.
Trace brute_event(const Trace& s);

/// event_of over paths_to_depth, relations by the enumerative oracles.
struct BrutePes {
  std::vector<Trace> events;  // normal forms, sorted by length then order
  std::vector<std::vector<char>> leq;
  std::vector<std::vector<char>> conflict;
};
BrutePes brute_pes(const GlobalType& g, std::size_t horizon);

/// Max of depth_trace over paths_to_depth(g, depth).
std::size_t brute_depth(const Participant& p, const GlobalType& g, std::size_t depth);

/// Max of sem_depth_k over the events of paths of length at most `depth`.
std::size_t brute_gdepth(const Participant& p, const GlobalType& g, std::size_t k,
                         std::size_t depth);

}  // namespace mpst::testing
