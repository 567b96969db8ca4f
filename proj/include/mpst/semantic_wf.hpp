#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mpst/event_structure.hpp"
#include "mpst/typing.hpp"

namespace mpst {

/// [s.pqa] and [s.pqb] with a != b.
bool initial_conflict(const GEvent& a, const GEvent& b);

struct LocalAction {
  enum class Dir { Send, Receive };
  Dir dir;
  Participant partner;
  Label label;

  auto operator<=>(const LocalAction&) const = default;
  std::string str() const {
    return partner + (dir == Dir::Send ? "!" : "?") + label;
  }
};

std::vector<LocalAction> trace_project(const Trace& s, const Participant& r);

struct SemProjCounterexample {
  std::size_t first;     // g1, the conflicting event extended by `extension`
  std::size_t second;    // g2, the event lacking a matching extension
  std::size_t extension; // g1' >= g1
  Participant participant;
};

struct SemProjectability {
  bool ok = true;
  std::optional<SemProjCounterexample> counterexample;
  std::size_t horizon = 0;
};

/// Quantifies over the events of `s` only, hence holds "at the horizon".
SemProjectability semantically_projectable(const PrimeES& s);

/// |s| when the trace of `e` is s1.a1...sk.ak with p in each ai and in no si,
/// 0 otherwise.
std::size_t sem_depth_k(const Participant& p, const GEvent& e, std::size_t k);
/// Same on an arbitrary trace: some member of [s] must end with the k-th
/// occurrence of p.
std::size_t sem_depth_k(const Participant& p, const Trace& s, std::size_t k);

/// Exact sup of sem_depth_k(p, ., k) over all events of g, without horizon:
/// longest accepting run of a finite automaton that guesses, along a path,
/// which communications end up in the causal past of the last one.
DepthValue sem_depth_limit(const GlobalType& g, const Participant& p, std::size_t k);

/// Exact: the value is the sup over all events of the origin (or the PES is
/// not truncated). Converging: the origin's sup is finite but larger.
/// Unbounded: the origin's sup is infinite. Without an origin the horizon
/// comparison yields Stable or Suspected.
enum class DepthStatus { Exact, Stable, Converging, Suspected, Unbounded, Unchecked };
struct SemDepthEntry {
  Participant participant;
  std::size_t k = 0;
  std::size_t value = 0;
  /// Value at the comparison horizon.
  std::optional<std::size_t> previous;
  /// sem_depth_limit of the origin, when known.
  std::optional<DepthValue> limit;
  DepthStatus status = DepthStatus::Unchecked;
};

struct SemBoundedness {
  std::vector<SemDepthEntry> entries;  // by participant, then k
  std::size_t horizon = 0;
  std::optional<std::size_t> compared_with;
  std::size_t k_max = 0;

  bool ok() const;
};

/// gdepth over the events of `s` for every participant and 1 <= k <= k_max.
std::size_t gdepth(const PrimeES& s, const Participant& p, std::size_t k);

/// Compares against `lower`, which must be built from the same type at a
/// smaller horizon. An entry is suspected when its value was already
/// positive at the lower horizon and grows; the origin's limit, when
/// present, settles the status instead.
SemBoundedness sem_bounded(const PrimeES& s, std::size_t k_max, const PrimeES& lower);
/// Rebuilds the origin of `s` at horizon - 2 for the comparison.
SemBoundedness sem_bounded(const PrimeES& s, std::size_t k_max);

std::string to_string(DepthStatus s);

}  // namespace mpst
