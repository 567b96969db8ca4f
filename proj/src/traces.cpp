#include "mpst/traces.hpp"

#include <stdexcept>

namespace mpst {

std::vector<std::size_t> minimal_positions(const Trace& s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool free = true;
    for (std::size_t j = 0; j < i && free; ++j) free = !s[j].depends_on(s[i]);
    if (free) out.push_back(i);
  }
  return out;
}

Trace trace_normal_form(const Trace& s) {
  Trace rest = s;
  Trace out;
  out.reserve(s.size());
  while (!rest.empty()) {
    std::size_t best = 0;
    bool found = false;
    for (std::size_t i : minimal_positions(rest))
      if (!found || rest[i] < rest[best]) {
        best = i;
        found = true;
      }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

bool trace_equivalent(const Trace& a, const Trace& b) {
  return a.size() == b.size() && trace_normal_form(a) == trace_normal_form(b);
}

bool is_pointed(const Trace& s) {
  if (s.empty()) throw std::invalid_argument("pointedness is undefined on the empty trace");
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    bool fed = false;
    for (std::size_t j = i + 1; j < s.size() && !fed; ++j) fed = s[i].depends_on(s[j]);
    if (!fed) return false;
  }
  return true;
}

namespace {

// Position in `w` of a copy of `a` that can be moved to the front, if any.
// Only the first letter of `w` dependent on `a` can qualify.
std::optional<std::size_t> movable(const Trace& w, const Communication& a) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i].depends_on(a)) {
      if (w[i] == a) return i;
      return std::nullopt;
    }
  return std::nullopt;
}

}  // namespace

std::optional<Trace> trace_residual(const Trace& w, const Trace& u) {
  if (u.size() > w.size()) return std::nullopt;
  Trace rest = w;
  for (const auto& a : u) {
    auto i = movable(rest, a);
    if (!i) return std::nullopt;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(*i));
  }
  return rest;
}

bool trace_prefix(const Trace& u, const Trace& w) { return trace_residual(w, u).has_value(); }

CommonPrefix common_prefix(const Trace& a, const Trace& b) {
  CommonPrefix r{{}, a, b};
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t i : minimal_positions(r.rest_a)) {
      auto j = movable(r.rest_b, r.rest_a[i]);
      if (!j) continue;
      r.prefix.push_back(r.rest_a[i]);
      r.rest_a.erase(r.rest_a.begin() + static_cast<std::ptrdiff_t>(i));
      r.rest_b.erase(r.rest_b.begin() + static_cast<std::ptrdiff_t>(*j));
      progress = true;
      break;
    }
  }
  return r;
}

}  // namespace mpst
