#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mpst/syntax.hpp"

namespace mpst {

/// A ~-class of pointed traces, held as its normal form.
class GEvent {
 public:
  /// Normalizes `s`. Throws std::invalid_argument if `s` is empty or not
  /// pointed.
  static GEvent of(const Trace& s);

  const Trace& trace() const { return trace_; }
  const Communication& cm() const { return trace_.back(); }
  /// The class of the trace without its last communication.
  Trace history() const { return Trace(trace_.begin(), trace_.end() - 1); }
  std::set<Participant> participants() const { return mpst::participants(trace_); }
  std::size_t size() const { return trace_.size(); }
  std::string str() const { return "[" + to_string(trace_) + "]"; }

  auto operator<=>(const GEvent&) const = default;

 private:
  explicit GEvent(Trace t) : trace_(std::move(t)) {}
  Trace trace_;
};

/// a o e: [a.s] when a shares a participant with e = [s], e otherwise.
GEvent causal_prefix(const Communication& a, const GEvent& e);
/// Right-to-left extension to traces.
GEvent causal_prefix(const Trace& s, const GEvent& e);

/// ev(s.a) = s o [a]. Throws std::invalid_argument on the empty trace.
GEvent event_of(const Trace& s);

bool event_leq(const GEvent& a, const GEvent& b);
bool event_conflict(const GEvent& a, const GEvent& b);

/// Dense square boolean relation over event indices.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : n_(n), bits_(n * n, 0) {}

  std::size_t size() const { return n_; }
  bool operator()(std::size_t i, std::size_t j) const { return bits_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, bool v = true) { bits_[i * n_ + j] = v; }
  bool operator==(const Relation&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<char> bits_;
};

struct PrimeES {
  std::vector<GEvent> events;
  Relation causality;  // causality(i, j) iff events[i] <= events[j]
  Relation conflict;
  std::optional<GlobalType> origin;
  std::size_t horizon = 0;
  /// True when some path of the origin was cut at the horizon.
  bool truncated = false;

  std::size_t size() const { return events.size(); }
  std::optional<std::size_t> index_of(const GEvent& e) const;
  bool concurrent(std::size_t i, std::size_t j) const {
    return i != j && !causality(i, j) && !causality(j, i) && !conflict(i, j);
  }
};

/// Events of all paths of length at most `horizon`, ordered by length and
/// then by normal form.
PrimeES build_pes(const GlobalType& g, std::size_t horizon);

/// Unordered pairs (i < j) of events with equal histories whose last
/// communications differ only in the label.
std::vector<std::pair<std::size_t, std::size_t>> initial_conflicts(
    const std::vector<GEvent>& events);

/// Builds a PES over `events` with the causality and conflict of
/// event_leq / event_conflict. When `events` is closed under prefixes,
/// conflict is computed as the upward closure of initial conflict.
PrimeES pes_from_events(std::vector<GEvent> events);

/// Sorted event indices.
using Configuration = std::vector<std::size_t>;

/// All configurations with at most `max_size` events, including the empty
/// one, in order of size and then lexicographically.
std::vector<Configuration> configurations(const PrimeES& s, std::size_t max_size);
bool is_configuration(const PrimeES& s, const Configuration& c);

struct PesValidation {
  bool ok = true;
  std::string violation;
  std::vector<std::size_t> witness;
};

PesValidation validate_pes(const PrimeES& s);

}  // namespace mpst
