#include "mpst/event_structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <tuple>
#include <functional>
#include <stdexcept>

#include "mpst/regular.hpp"
#include "mpst/traces.hpp"

namespace mpst {

GEvent GEvent::of(const Trace& s) {
  if (!is_pointed(s)) throw std::invalid_argument("'" + to_string(s) + "' is not a pointed trace");
  return GEvent(trace_normal_form(s));
}

GEvent causal_prefix(const Communication& a, const GEvent& e) {
  for (const auto& b : e.trace())
    if (a.depends_on(b)) {
      Trace t{a};
      t.insert(t.end(), e.trace().begin(), e.trace().end());
      return GEvent::of(t);
    }
  return e;
}

GEvent causal_prefix(const Trace& s, const GEvent& e) {
  GEvent cur = e;
  for (auto it = s.rbegin(); it != s.rend(); ++it) cur = causal_prefix(*it, cur);
  return cur;
}

GEvent event_of(const Trace& s) {
  if (s.empty()) throw std::invalid_argument("the empty trace generates no event");
  // Keep exactly the communications that feed the last one.
  std::vector<char> keep(s.size(), 0);
  keep[s.size() - 1] = 1;
  std::set<Participant> live{s.back().sender, s.back().receiver};
  for (std::size_t i = s.size() - 1; i-- > 0;)
    if (live.count(s[i].sender) || live.count(s[i].receiver)) {
      keep[i] = 1;
      live.insert(s[i].sender);
      live.insert(s[i].receiver);
    }
  Trace t;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (keep[i]) t.push_back(s[i]);
  return GEvent::of(t);
}

bool event_leq(const GEvent& a, const GEvent& b) { return trace_prefix(a.trace(), b.trace()); }

bool event_conflict(const GEvent& a, const GEvent& b) {
  const CommonPrefix c = common_prefix(a.trace(), b.trace());
  for (std::size_t i : minimal_positions(c.rest_a))
    for (std::size_t j : minimal_positions(c.rest_b)) {
      const auto& x = c.rest_a[i];
      const auto& y = c.rest_b[j];
      if (x.same_channel(y) && x.label != y.label) return true;
    }
  return false;
}

std::optional<std::size_t> PrimeES::index_of(const GEvent& e) const {
  for (std::size_t i = 0; i < events.size(); ++i)
    if (events[i] == e) return i;
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> initial_conflicts(
    const std::vector<GEvent>& events) {
  std::map<std::tuple<Trace, Participant, Participant>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const auto& c = events[i].cm();
    groups[{trace_normal_form(events[i].history()), c.sender, c.receiver}].push_back(i);
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& [key, members] : groups)
    for (std::size_t x = 0; x < members.size(); ++x)
      for (std::size_t y = x + 1; y < members.size(); ++y)
        out.emplace_back(std::min(members[x], members[y]), std::max(members[x], members[y]));
  std::sort(out.begin(), out.end());
  return out;
}

PrimeES pes_from_events(std::vector<GEvent> events) {
  std::sort(events.begin(), events.end(), [](const GEvent& a, const GEvent& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.trace() < b.trace();
  });
  events.erase(std::unique(events.begin(), events.end()), events.end());
  PrimeES s;
  const std::size_t n = events.size();
  s.causality = Relation(n);
  s.conflict = Relation(n);
  std::map<Trace, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(events[i].trace(), i);
  // The events below e are the causal pasts of its occurrences.
  bool closed = true;
  for (std::size_t j = 0; j < n; ++j) {
    const Trace& t = events[j].trace();
    for (std::size_t x = 0; x < t.size(); ++x) {
      const auto it = index.find(event_of(Trace(t.begin(), t.begin() + x + 1)).trace());
      if (it == index.end())
        closed = false;
      else
        s.causality.set(it->second, j);
    }
  }
  if (closed) {
    // Downward closed: conflict is inherited from initial conflict.
    const std::size_t words = (n + 63) / 64;
    using Bits = std::vector<std::uint64_t>;
    std::vector<Bits> up(n, Bits(words, 0)), hit(n, Bits(words, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (s.causality(i, j)) up[i][j / 64] |= std::uint64_t{1} << (j % 64);
    for (const auto& [a, b] : initial_conflicts(events))
      for (std::size_t w = 0; w < words; ++w) {
        hit[a][w] |= up[b][w];
        hit[b][w] |= up[a][w];
      }
    for (std::size_t a = 0; a < n; ++a) {
      Bits row(words, 0);
      for (std::size_t x = 0; x < n; ++x)
        if (s.causality(x, a))
          for (std::size_t w = 0; w < words; ++w) row[w] |= hit[x][w];
      for (std::size_t b = 0; b < n; ++b)
        if (row[b / 64] >> (b % 64) & 1) s.conflict.set(a, b);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        s.causality.set(i, j, events[i].size() < events[j].size() && event_leq(events[i], events[j]));
        if (j > i && event_conflict(events[i], events[j])) {
          s.conflict.set(i, j);
          s.conflict.set(j, i);
        }
      }
  }
  s.events = std::move(events);
  return s;
}

PrimeES build_pes(const GlobalType& g, std::size_t horizon) {
  const GlobalGraph gg = GlobalGraph::from(g);
  std::set<GEvent> events;
  bool truncated = false;
  Trace cur;
  std::function<void(std::size_t)> go = [&](std::size_t node) {
    const auto& nd = gg.nodes[node];
    if (nd.end) return;
    if (cur.size() == horizon) {
      truncated = true;
      return;
    }
    for (const auto& [label, t] : nd.next) {
      cur.push_back({nd.sender, nd.receiver, label});
      events.insert(event_of(cur));
      go(t);
      cur.pop_back();
    }
  };
  go(0);
  PrimeES s = pes_from_events({events.begin(), events.end()});
  s.origin = g;
  s.horizon = horizon;
  s.truncated = truncated;
  return s;
}

bool is_configuration(const PrimeES& s, const Configuration& c) {
  std::vector<char> in(s.size(), 0);
  for (std::size_t i : c) in[i] = 1;
  for (std::size_t i : c) {
    for (std::size_t j = 0; j < s.size(); ++j)
      if (s.causality(j, i) && !in[j]) return false;
    for (std::size_t j : c)
      if (s.conflict(i, j)) return false;
  }
  return true;
}

std::vector<Configuration> configurations(const PrimeES& s, std::size_t max_size) {
  const std::size_t n = s.size();
  std::vector<Configuration> out{{}};
  std::vector<Configuration> level{{}};
  for (std::size_t size = 0; size < max_size && !level.empty(); ++size) {
    std::set<Configuration> next;
    for (const auto& c : level) {
      std::vector<char> in(n, 0);
      for (std::size_t i : c) in[i] = 1;
      for (std::size_t e = 0; e < n; ++e) {
        if (in[e]) continue;
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j)
          ok = !(j != e && s.causality(j, e) && !in[j]);
        for (std::size_t j : c)
          if (s.conflict(e, j)) ok = false;
        if (!ok) continue;
        Configuration d = c;
        d.insert(std::upper_bound(d.begin(), d.end(), e), e);
        next.insert(std::move(d));
      }
    }
    level.assign(next.begin(), next.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

PesValidation validate_pes(const PrimeES& s) {
  const std::size_t n = s.size();
  auto fail = [](std::string what, std::vector<std::size_t> w) {
    return PesValidation{false, std::move(what), std::move(w)};
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (!s.causality(i, i)) return fail("causality not reflexive", {i});
    if (s.conflict(i, i)) return fail("conflict not irreflexive", {i});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && s.causality(i, j) && s.causality(j, i))
        return fail("causality not antisymmetric", {i, j});
      if (s.conflict(i, j) != s.conflict(j, i)) return fail("conflict not symmetric", {i, j});
    }
  // Rows as bitsets: up[j] must be contained in up[i] and in conf[i].
  const std::size_t words = (n + 63) / 64;
  using Bits = std::vector<std::uint64_t>;
  std::vector<Bits> up(n, Bits(words, 0)), conf(n, Bits(words, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (s.causality(i, j)) up[i][j / 64] |= std::uint64_t{1} << (j % 64);
      if (s.conflict(i, j)) conf[i][j / 64] |= std::uint64_t{1} << (j % 64);
    }
  auto first_missing = [&](const Bits& sub, const Bits& super) -> std::optional<std::size_t> {
    for (std::size_t w = 0; w < words; ++w)
      if (const std::uint64_t d = sub[w] & ~super[w]) return w * 64 + std::countr_zero(d);
    return std::nullopt;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (s.causality(i, j))
        if (const auto k = first_missing(up[j], up[i]))
          return fail("causality not transitive", {i, j, *k});
      if (s.conflict(i, j))
        if (const auto k = first_missing(up[j], conf[i]))
          return fail("conflict not hereditary", {i, j, *k});
    }
  return {};
}

}  // namespace mpst
