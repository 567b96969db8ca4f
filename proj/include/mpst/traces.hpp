#pragma once

#include <optional>
#include <utility>

#include "mpst/syntax.hpp"

namespace mpst {

// Two communications are independent iff their participant sets are
// disjoint; ~ is the induced permutation equivalence on traces.

/// Least member of [s] in lexicographic order on communications.
Trace trace_normal_form(const Trace& s);

bool trace_equivalent(const Trace& a, const Trace& b);

/// Throws std::invalid_argument on the empty trace.
bool is_pointed(const Trace& s);

/// If [u] is a prefix of [w] (w ~ u.v for some v), returns such a v.
std::optional<Trace> trace_residual(const Trace& w, const Trace& u);
bool trace_prefix(const Trace& u, const Trace& w);

/// Greatest common prefix c of [a] and [b], with a ~ c.a1 and b ~ c.b1.
struct CommonPrefix {
  Trace prefix;
  Trace rest_a;
  Trace rest_b;
};
CommonPrefix common_prefix(const Trace& a, const Trace& b);

/// Letters of `s` that can be moved to the front, by position.
std::vector<std::size_t> minimal_positions(const Trace& s);

}  // namespace mpst
