#include "mpst/semantic_wf.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <functional>
#include <map>
#include <set>
#include <tuple>

#include "mpst/regular.hpp"
#include "mpst/traces.hpp"

namespace mpst {

bool initial_conflict(const GEvent& a, const GEvent& b) {
  const auto& x = a.cm();
  const auto& y = b.cm();
  if (!x.same_channel(y) || x.label == y.label) return false;
  return a.size() == b.size() && trace_normal_form(a.history()) == trace_normal_form(b.history());
}

std::vector<LocalAction> trace_project(const Trace& s, const Participant& r) {
  std::vector<LocalAction> out;
  for (const auto& c : s) {
    if (c.sender == r)
      out.push_back({LocalAction::Dir::Send, c.receiver, c.label});
    else if (c.receiver == r)
      out.push_back({LocalAction::Dir::Receive, c.sender, c.label});
  }
  return out;
}

namespace {

struct BranchPoint {
  Trace before;
  std::size_t node;  // target of the second label
};

// Paths s' of the origin, shorter than the horizon, such that ev(s'.a) and
// ev(s'.b) are the two events; a and b share a channel.
std::vector<BranchPoint> branch_points(const GlobalGraph& g, std::size_t horizon, const GEvent& a,
                                       const GEvent& b) {
  std::vector<BranchPoint> out;
  Trace cur;
  const Communication& x = a.cm();
  const Communication& y = b.cm();
  std::function<void(std::size_t)> go = [&](std::size_t node) {
    const auto& nd = g.nodes[node];
    if (nd.end || cur.size() + 1 > horizon) return;
    if (nd.sender == x.sender && nd.receiver == x.receiver &&
        nd.successor(x.label) && nd.successor(y.label)) {
      Trace t = cur;
      t.push_back(x);
      if (event_of(t) == a) {
        t.back() = y;
        if (event_of(t) == b) out.push_back({cur, *nd.successor(y.label)});
      }
    }
    for (const auto& [label, t] : nd.next) {
      cur.push_back({nd.sender, nd.receiver, label});
      go(t);
      cur.pop_back();
    }
  };
  go(0);
  return out;
}

// Is there a path s'.b.s2.beta of the origin, beta = `target`, whose event
// lies above ev(s'.b) and whose history projects on `r` to `local`?
bool match_beyond_horizon(const GlobalGraph& g, const BranchPoint& bp, const Communication& b,
                          const Communication& target, const Participant& r,
                          const std::vector<LocalAction>& local) {
  const auto before = trace_project(bp.before, r);
  if (before.size() > local.size() || !std::equal(before.begin(), before.end(), local.begin()))
    return false;
  std::map<Participant, std::size_t> ids;
  const auto reach = g.reachable_participants();
  for (const auto& q : reach[0]) ids.emplace(q, ids.size());
  auto bit = [&](const Participant& q) { return std::uint64_t{1} << ids.at(q); };
  // (node, matched actions of r, participants causally after b)
  using State = std::tuple<std::size_t, std::size_t, std::uint64_t>;
  std::set<State> seen;
  std::vector<State> todo{{bp.node, before.size(), bit(b.sender) | bit(b.receiver)}};
  seen.insert(todo.back());
  while (!todo.empty()) {
    const auto [node, k, after] = todo.back();
    todo.pop_back();
    const auto& nd = g.nodes[node];
    if (nd.end) continue;
    const std::uint64_t parts = bit(nd.sender) | bit(nd.receiver);
    const bool depends = (parts & after) != 0;
    for (const auto& [label, t] : nd.next) {
      const Communication c{nd.sender, nd.receiver, label};
      if (c == target && depends && k == local.size()) return true;
      std::size_t k2 = k;
      if (c.involves(r)) {
        if (k == local.size() || trace_project({c}, r).front() != local[k]) continue;
        ++k2;
      }
      State st{t, k2, depends ? after | parts : after};
      if (seen.insert(st).second) todo.push_back(st);
    }
  }
  return false;
}

}  // namespace

SemProjectability semantically_projectable(const PrimeES& s) {
  SemProjectability res;
  res.horizon = s.horizon;
  const std::size_t n = s.size();
  std::optional<GlobalGraph> graph;
  if (s.origin && s.truncated) graph = GlobalGraph::from(*s.origin);
  // History of each event projected on the two participants of its action.
  std::vector<std::array<std::vector<LocalAction>, 2>> local(n);
  for (std::size_t e = 0; e < n; ++e) {
    const Trace h = s.events[e].history();
    local[e][0] = trace_project(h, s.events[e].cm().sender);
    local[e][1] = trace_project(h, s.events[e].cm().receiver);
  }
  auto above = [&](std::size_t i) {
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < n; ++e)
      if (s.causality(i, e)) out.push_back(e);
    return out;
  };
  auto check = [&](std::size_t i, std::size_t j) {
    const auto& ch = s.events[i].cm();
    const auto up_j = above(j);
    std::optional<std::vector<BranchPoint>> points;
    for (std::size_t e1 : above(i)) {
      const auto& a1 = s.events[e1].cm();
      for (std::size_t side = 0; side < 2; ++side) {
        const Participant& r = side == 0 ? a1.sender : a1.receiver;
        if (ch.involves(r)) continue;
        bool matched = false;
        for (std::size_t e2 : up_j)
          if ((matched = s.events[e2].cm() == a1 && local[e2][side] == local[e1][side])) break;
        if (!matched && graph) {
          if (!points) points = branch_points(*graph, s.horizon, s.events[i], s.events[j]);
          for (const auto& bp : *points)
            if ((matched = match_beyond_horizon(*graph, bp, s.events[j].cm(), a1, r, local[e1][side])))
              break;
        }
        if (!matched) {
          res.ok = false;
          res.counterexample = SemProjCounterexample{i, j, e1, r};
          return false;
        }
      }
    }
    return true;
  };
  for (const auto& [i, j] : initial_conflicts(s.events))
    if (!check(i, j) || !check(j, i)) return res;
  return res;
}

std::size_t sem_depth_k(const Participant& p, const GEvent& e, std::size_t k) {
  return sem_depth_k(p, e.trace(), k);
}

std::size_t sem_depth_k(const Participant& p, const Trace& s, std::size_t k) {
  std::size_t count = 0;
  std::size_t last = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i].involves(p)) {
      ++count;
      last = i;
    }
  if (k == 0 || count != k) return 0;
  for (std::size_t i = last + 1; i < s.size(); ++i)
    if (s[i].depends_on(s[last])) return 0;
  return s.size();
}

std::size_t gdepth(const PrimeES& s, const Participant& p, std::size_t k) {
  std::size_t best = 0;
  for (const auto& e : s.events) best = std::max(best, sem_depth_k(p, e, k));
  return best;
}

DepthValue sem_depth_limit(const GlobalType& g, const Participant& p, std::size_t k) {
  const GlobalGraph gg = GlobalGraph::from(g);
  const auto reach = gg.reachable_participants();
  std::map<Participant, std::size_t> ids;
  for (const auto& q : reach[0]) ids.emplace(q, ids.size());
  if (k == 0 || !ids.count(p)) return DepthValue::finite(0);
  if (ids.size() > 16) throw std::invalid_argument("too many participants for sem_depth_limit");
  // State (node, L, c): L is the set of participants of the communications
  // still to come that belong to the causal past of the last one, c the
  // number of p-communications so far. One extra state accepts.
  const std::size_t masks = std::size_t{1} << ids.size();
  const std::size_t n = gg.size() * masks * (k + 1);
  const std::size_t accept = n;
  auto id = [&](std::size_t node, std::size_t mask, std::size_t c) {
    return (node * masks + mask) * (k + 1) + c;
  };
  struct Edge {
    std::size_t to;
    int weight;
  };
  std::vector<std::vector<Edge>> adj(n + 1);
  std::vector<std::vector<std::size_t>> radj(n + 1);
  auto add = [&](std::size_t a, std::size_t b, int w) {
    adj[a].push_back({b, w});
    radj[b].push_back(a);
  };
  const std::size_t pb = std::size_t{1} << ids.at(p);
  for (std::size_t node = 0; node < gg.size(); ++node) {
    const auto& nd = gg.nodes[node];
    if (nd.end) continue;
    const std::size_t m = (std::size_t{1} << ids.at(nd.sender)) | (std::size_t{1} << ids.at(nd.receiver));
    const bool hits = (m & pb) != 0;
    for (std::size_t mask = 0; mask < masks; ++mask)
      for (std::size_t c = 0; c <= k; ++c) {
        const std::size_t c2 = c + (hits ? 1 : 0);
        if (c2 > k) continue;
        for (const auto& [label, t] : nd.next) {
          if (hits && c2 == k && mask == m) add(id(node, mask, c), accept, 1);
          if ((m & mask) == 0) add(id(node, mask, c), id(t, mask, c), 0);
          if ((m & mask) != m) continue;
          for (std::size_t sub = m; sub; sub = (sub - 1) & m)
            add(id(node, mask, c), id(t, (mask & ~m) | sub, c2), 1);
        }
      }
  }
  std::vector<char> fwd(n + 1, 0), bwd(n + 1, 0);
  std::vector<std::size_t> stack;
  for (std::size_t mask = 0; mask < masks; ++mask) {
    fwd[id(0, mask, 0)] = 1;
    stack.push_back(id(0, mask, 0));
  }
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (const auto& e : adj[v])
      if (!fwd[e.to]) fwd[e.to] = 1, stack.push_back(e.to);
  }
  if (!fwd[accept]) return DepthValue::finite(0);
  bwd[accept] = 1;
  stack.push_back(accept);
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t u : radj[v])
      if (!bwd[u]) bwd[u] = 1, stack.push_back(u);
  }
  auto useful = [&](std::size_t v) { return fwd[v] && bwd[v]; };
  // Tarjan's SCCs over the useful states; components come out in reverse
  // topological order, so longest distances to `accept` fill in directly.
  std::vector<std::size_t> index(n + 1, SIZE_MAX), low(n + 1, 0), comp(n + 1, SIZE_MAX);
  std::vector<std::size_t> best(n + 1, 0);
  std::vector<std::size_t> scc_stack;
  std::vector<char> on(n + 1, 0);
  std::size_t counter = 0, comps = 0;
  bool infinite = false;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    scc_stack.push_back(v);
    on[v] = 1;
    for (const auto& e : adj[v]) {
      if (!useful(e.to)) continue;
      if (index[e.to] == SIZE_MAX) {
        visit(e.to);
        low[v] = std::min(low[v], low[e.to]);
      } else if (on[e.to]) {
        low[v] = std::min(low[v], index[e.to]);
      }
    }
    if (low[v] != index[v]) return;
    std::vector<std::size_t> members;
    std::size_t w;
    do {
      w = scc_stack.back();
      scc_stack.pop_back();
      on[w] = 0;
      comp[w] = comps;
      members.push_back(w);
    } while (w != v);
    // Inside a component only weight-0 edges may occur; distances are then
    // shared by all members.
    std::size_t d = 0;
    for (std::size_t u : members)
      for (const auto& e : adj[u]) {
        if (!useful(e.to)) continue;
        if (comp[e.to] == comps) {
          if (e.weight > 0) infinite = true;
        } else {
          d = std::max(d, best[e.to] + static_cast<std::size_t>(e.weight));
        }
      }
    for (std::size_t u : members) best[u] = d;
    ++comps;
  };
  std::size_t sup = 0;
  for (std::size_t mask = 0; mask < masks; ++mask) {
    const std::size_t v = id(0, mask, 0);
    if (!useful(v)) continue;
    if (index[v] == SIZE_MAX) visit(v);
    sup = std::max(sup, best[v]);
  }
  if (infinite) return DepthValue::unbounded();
  return DepthValue::finite(sup);
}

bool SemBoundedness::ok() const {
  return std::none_of(entries.begin(), entries.end(),
                      [](const SemDepthEntry& e) {
                        return e.status == DepthStatus::Suspected ||
                               e.status == DepthStatus::Unbounded;
                      });
}

namespace {

std::set<Participant> participants_of(const PrimeES& s) {
  std::set<Participant> out;
  for (const auto& e : s.events) {
    out.insert(e.cm().sender);
    out.insert(e.cm().receiver);
  }
  return out;
}

SemBoundedness table(const PrimeES& s, std::size_t k_max, const PrimeES* lower) {
  SemBoundedness res;
  res.horizon = s.horizon;
  res.k_max = k_max;
  if (lower) res.compared_with = lower->horizon;
  for (const auto& p : participants_of(s))
    for (std::size_t k = 1; k <= k_max; ++k) {
      SemDepthEntry e;
      e.participant = p;
      e.k = k;
      e.value = gdepth(s, p, k);
      if (lower) e.previous = gdepth(*lower, p, k);
      const bool grows = e.previous && *e.previous > 0 && e.value > *e.previous;
      if (s.origin) e.limit = sem_depth_limit(*s.origin, p, k);
      if (!s.truncated) {
        e.status = DepthStatus::Exact;
      } else if (e.limit) {
        if (e.limit->infinite)
          e.status = DepthStatus::Unbounded;
        else
          e.status = e.limit->value == e.value ? DepthStatus::Exact : DepthStatus::Converging;
      } else if (lower) {
        e.status = grows ? DepthStatus::Suspected : DepthStatus::Stable;
      }
      res.entries.push_back(std::move(e));
    }
  return res;
}

}  // namespace

SemBoundedness sem_bounded(const PrimeES& s, std::size_t k_max, const PrimeES& lower) {
  return table(s, k_max, &lower);
}

SemBoundedness sem_bounded(const PrimeES& s, std::size_t k_max) {
  if (s.truncated && s.origin && s.horizon > 2) {
    const PrimeES lower = build_pes(*s.origin, s.horizon - 2);
    return table(s, k_max, &lower);
  }
  return table(s, k_max, nullptr);
}

std::string to_string(DepthStatus s) {
  switch (s) {
    case DepthStatus::Exact: return "exact";
    case DepthStatus::Stable: return "stable";
    case DepthStatus::Converging: return "converging";
    case DepthStatus::Suspected: return "SUSPECTED-UNBOUNDED";
    case DepthStatus::Unbounded: return "UNBOUNDED";
    case DepthStatus::Unchecked: return "unchecked";
  }
  return {};
}

}  // namespace mpst
