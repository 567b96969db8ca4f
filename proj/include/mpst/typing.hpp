#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "mpst/regular.hpp"
#include "mpst/syntax.hpp"

namespace mpst {

struct Projection {
  std::optional<Process> process;  // none when undefined
  /// Node of the global graph (breadth-first numbering) where the branch
  /// projections disagree, and the subterm rooted there.
  std::optional<std::size_t> node;
  std::optional<GlobalType> subterm;
  std::string reason;

  bool defined() const { return process.has_value(); }
};

Projection project(const GlobalType& g, const Participant& r);

struct Projectability {
  bool ok = true;
  Participant participant;
  Projection failure;  // meaningful when !ok
};

/// Checks every participant in ascending order; reports the first failure.
Projectability projectable(const GlobalType& g);

/// |s1.a| for the first communication `a` of `s` involving `p`; 0 if none.
std::size_t depth_trace(const Participant& p, const Trace& s);

struct DepthValue {
  bool infinite = false;
  std::size_t value = 0;

  static DepthValue finite(std::size_t n) { return {false, n}; }
  static DepthValue unbounded() { return {true, 0}; }
  bool operator==(const DepthValue&) const = default;
  std::string str() const { return infinite ? "inf" : std::to_string(value); }
};

DepthValue depth_global(const Participant& p, const GlobalType& g);
DepthValue depth_global(const Participant& p, const GlobalGraph& g, std::size_t node);

struct Boundedness {
  bool ok = true;
  Participant participant;
  std::size_t node = 0;
  std::optional<GlobalType> subterm;
};

Boundedness bounded(const GlobalType& g);

/// The coinductive preorder: outputs are invariant, inputs contravariant in
/// their label sets.
bool process_leq(const Process& a, const Process& b);

struct Typing {
  bool ok = true;
  std::string reason;
  std::optional<Participant> participant;
};

Typing typecheck(const Network& n, const GlobalType& g);

struct WfReport {
  Projectability projection;
  Boundedness boundedness;

  bool projectable() const { return projection.ok; }
  bool bounded() const { return boundedness.ok; }
  bool well_formed() const { return projectable() && bounded(); }
};

WfReport well_formed(const GlobalType& g);

}  // namespace mpst
