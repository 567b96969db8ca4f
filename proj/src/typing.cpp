#include "mpst/typing.hpp"

#include <map>
#include <numeric>
#include <queue>

namespace mpst {
namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

enum class Role { Zero, Out, In, Through };

}  // namespace

Projection project(const GlobalType& g, const Participant& r) {
  const GlobalGraph gg = GlobalGraph::from(g);
  const auto reach = gg.reachable_participants();
  const std::size_t n = gg.size();

  std::vector<Role> role(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& nd = gg.nodes[i];
    if (nd.end || !reach[i].count(r))
      role[i] = Role::Zero;
    else if (nd.sender == r)
      role[i] = Role::Out;
    else if (nd.receiver == r)
      role[i] = Role::In;
    else
      role[i] = Role::Through;
  }

  // A node not involving r projects to the common projection of its
  // branches, so it shares a class with all of its children.
  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i)
    if (role[i] == Role::Through)
      for (const auto& [label, t] : gg.nodes[i].next) uf.unite(i, t);

  std::vector<std::size_t> rep(n, n);
  for (std::size_t i = 0; i < n; ++i)
    if (role[i] != Role::Through && rep[uf.find(i)] == n) rep[uf.find(i)] = i;
  auto image = [&](std::size_t node) { return rep[uf.find(node)]; };

  auto partner = [&](std::size_t i) {
    return role[i] == Role::Out ? gg.nodes[i].receiver : gg.nodes[i].sender;
  };
  // Bisimilarity of two concrete nodes in the quotient graph.
  auto agree = [&](std::size_t x0, std::size_t y0) {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::vector<std::pair<std::size_t, std::size_t>> work{{x0, y0}};
    while (!work.empty()) {
      auto [x, y] = work.back();
      work.pop_back();
      if (x == y || !seen.insert({x, y}).second) continue;
      if (x == n || y == n) return false;
      if (role[x] != role[y]) return false;
      if (role[x] == Role::Zero) continue;
      if (partner(x) != partner(y)) return false;
      const auto& nx = gg.nodes[x];
      const auto& ny = gg.nodes[y];
      if (nx.next.size() != ny.next.size()) return false;
      for (const auto& [label, tx] : nx.next) {
        const std::size_t* ty = ny.successor(label);
        if (!ty) return false;
        work.emplace_back(image(tx), image(*ty));
      }
    }
    return true;
  };

  std::vector<char> consistent(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = uf.find(i);
    if (!consistent[c]) continue;
    if (rep[c] == n || (role[i] != Role::Through && !agree(i, rep[c]))) consistent[c] = 0;
  }

  Projection out;
  // Report a branching node of the first inconsistent class when there is one.
  std::optional<std::size_t> culprit;
  for (std::size_t i = 0; i < n; ++i) {
    if (role[i] != Role::Through || consistent[uf.find(i)]) continue;
    if (!culprit) culprit = i;
    if (gg.nodes[i].next.size() > 1 && uf.find(i) == uf.find(*culprit)) {
      culprit = i;
      break;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (culprit && i == *culprit) {
      out.node = i;
      out.subterm = gg.term(i);
      out.reason = "branch projections on '" + r + "' differ at " + gg.nodes[i].sender + "->" +
                   gg.nodes[i].receiver;
      return out;
    }
  }

  ProcessGraph pg;
  std::map<std::size_t, std::size_t> index;
  std::vector<std::size_t> order;
  std::queue<std::size_t> work;
  auto visit = [&](std::size_t c) {
    auto [it, fresh] = index.emplace(c, order.size());
    if (fresh) {
      order.push_back(c);
      work.push(c);
    }
    return it->second;
  };
  visit(image(0));
  while (!work.empty()) {
    const std::size_t c = work.front();
    work.pop();
    ProcessGraph::Node pn;
    if (role[c] != Role::Zero) {
      pn.kind = role[c] == Role::Out ? ProcessGraph::Kind::Out : ProcessGraph::Kind::In;
      pn.partner = partner(c);
      for (const auto& [label, t] : gg.nodes[c].next) pn.next.emplace_back(label, visit(image(t)));
    }
    pg.nodes.push_back(std::move(pn));
  }
  out.process = pg.term();
  return out;
}

Projectability projectable(const GlobalType& g) {
  Projectability res;
  for (const auto& p : participants_of(g)) {
    Projection pr = project(g, p);
    if (!pr.defined()) {
      res.ok = false;
      res.participant = p;
      res.failure = std::move(pr);
      return res;
    }
  }
  return res;
}

std::size_t depth_trace(const Participant& p, const Trace& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i].involves(p)) return i + 1;
  return 0;
}

DepthValue depth_global(const Participant& p, const GlobalGraph& g, std::size_t start) {
  const auto& s = g.nodes[start];
  if (s.end) return DepthValue::finite(0);
  if (s.involves(p)) return DepthValue::finite(1);

  const std::size_t n = g.size();
  auto free = [&](std::size_t i) { return !g.nodes[i].end && !g.nodes[i].involves(p); };

  // p-free region reachable from start.
  std::vector<char> region(n, 0);
  std::vector<std::size_t> stack{start};
  region[start] = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (const auto& [label, t] : g.nodes[i].next)
      if (free(t) && !region[t]) {
        region[t] = 1;
        stack.push_back(t);
      }
  }

  // Region nodes from which a p-node is reachable through the region.
  std::vector<char> hits(n, 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!region[i] || hits[i]) continue;
      for (const auto& [label, t] : g.nodes[i].next)
        if (g.nodes[t].involves(p) || (region[t] && hits[t])) {
          hits[i] = 1;
          changed = true;
          break;
        }
    }
  }
  if (!hits[start]) return DepthValue::finite(0);

  // Longest path over the hitting subgraph; a cycle there is unbounded.
  enum : char { White, Grey, Black };
  std::vector<char> colour(n, White);
  std::vector<std::size_t> best(n, 0);
  bool cyclic = false;
  auto dfs = [&](auto&& self, std::size_t i) -> void {
    colour[i] = Grey;
    std::size_t m = 0;
    for (const auto& [label, t] : g.nodes[i].next) {
      if (g.nodes[t].involves(p)) {
        m = std::max<std::size_t>(m, 1);
      } else if (region[t] && hits[t]) {
        if (colour[t] == Grey) {
          cyclic = true;
          return;
        }
        if (colour[t] == White) self(self, t);
        if (cyclic) return;
        m = std::max(m, best[t]);
      }
    }
    best[i] = 1 + m;
    colour[i] = Black;
  };
  dfs(dfs, start);
  if (cyclic) return DepthValue::unbounded();
  return DepthValue::finite(best[start]);
}

DepthValue depth_global(const Participant& p, const GlobalType& g) {
  return depth_global(p, GlobalGraph::from(g), 0);
}

Boundedness bounded(const GlobalType& g) {
  const GlobalGraph gg = GlobalGraph::from(g);
  const auto parts = participants_of(g);
  Boundedness res;
  for (std::size_t i = 0; i < gg.size(); ++i)
    for (const auto& p : parts)
      if (depth_global(p, gg, i).infinite) {
        res.ok = false;
        res.participant = p;
        res.node = i;
        res.subterm = gg.term(i);
        return res;
      }
  return res;
}

bool process_leq(const Process& a, const Process& b) {
  const ProcessGraph ga = ProcessGraph::from(a);
  const ProcessGraph gb = ProcessGraph::from(b);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<std::pair<std::size_t, std::size_t>> work{{ga.root, gb.root}};
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if (!seen.insert({x, y}).second) continue;
    const auto& nx = ga.nodes[x];
    const auto& ny = gb.nodes[y];
    if (nx.kind != ny.kind) return false;
    if (nx.kind == ProcessGraph::Kind::Zero) continue;
    if (nx.partner != ny.partner) return false;
    if (nx.kind == ProcessGraph::Kind::Out && nx.next.size() != ny.next.size()) return false;
    for (const auto& [label, ty] : ny.next) {
      const std::size_t* tx = nx.successor(label);
      if (!tx) return false;
      work.emplace_back(*tx, ty);
    }
  }
  return true;
}

Typing typecheck(const Network& n, const GlobalType& g) {
  Typing res;
  const Projectability pr = projectable(g);
  if (!pr.ok) {
    res.ok = false;
    res.participant = pr.participant;
    res.reason = "global type not projectable: " + pr.failure.reason;
    return res;
  }
  const auto parts = participants_of(g);
  for (const auto& p : parts)
    if (!n.at(p)) {
      res.ok = false;
      res.participant = p;
      res.reason = "participant '" + p + "' has no process in the network";
      return res;
    }
  for (const auto& [p, proc] : n.bindings()) {
    const Process expected = parts.count(p) ? *project(g, p).process : Process::zero();
    if (!process_leq(proc, expected)) {
      res.ok = false;
      res.participant = p;
      res.reason = "process of '" + p + "' (" + proc.str() + ") is not below its projection (" +
                   expected.str() + ")";
      return res;
    }
  }
  return res;
}

WfReport well_formed(const GlobalType& g) { return {projectable(g), bounded(g)}; }

}  // namespace mpst
