#include "mpst/regular.hpp"

#include <functional>
#include <map>
#include <queue>
#include <stdexcept>

namespace mpst {

const std::size_t* GlobalGraph::Node::successor(const Label& l) const {
  for (const auto& [label, target] : next)
    if (label == l) return &target;
  return nullptr;
}

const std::size_t* ProcessGraph::Node::successor(const Label& l) const {
  for (const auto& [label, target] : next)
    if (label == l) return &target;
  return nullptr;
}

namespace {

// Raw graph with alias entries for recursion binders; aliases are resolved
// and dropped once the whole term has been visited.
template <class GraphNode>
struct RawGraph {
  struct Entry {
    bool alias = false;
    std::size_t target = 0;
    GraphNode node;
  };
  std::vector<Entry> entries;

  std::size_t resolve(std::size_t i) const {
    std::set<std::size_t> seen;
    while (entries[i].alias) {
      if (!seen.insert(i).second) throw std::invalid_argument("unguarded recursion");
      i = entries[i].target;
    }
    return i;
  }

  // Breadth-first renumbering of real nodes reachable from `root`.
  std::pair<std::vector<GraphNode>, std::size_t> compact(std::size_t root) const {
    std::map<std::size_t, std::size_t> index;
    std::vector<std::size_t> order;
    std::queue<std::size_t> work;
    const std::size_t r = resolve(root);
    index[r] = 0;
    order.push_back(r);
    work.push(r);
    while (!work.empty()) {
      const std::size_t cur = work.front();
      work.pop();
      for (const auto& [label, t] : entries[cur].node.next) {
        const std::size_t rt = resolve(t);
        if (index.emplace(rt, order.size()).second) {
          order.push_back(rt);
          work.push(rt);
        }
      }
    }
    std::vector<GraphNode> nodes;
    nodes.reserve(order.size());
    for (std::size_t old : order) {
      GraphNode n = entries[old].node;
      for (auto& [label, t] : n.next) t = index.at(resolve(t));
      nodes.push_back(std::move(n));
    }
    return {std::move(nodes), 0};
  }
};

using Env = std::map<std::string, std::size_t>;

std::size_t build(RawGraph<GlobalGraph::Node>& raw, const GlobalType& t, const Env& env) {
  switch (t.kind()) {
    case GlobalType::Kind::End:
      raw.entries.push_back({});
      return raw.entries.size() - 1;
    case GlobalType::Kind::Var: {
      auto it = env.find(t.var_name());
      if (it == env.end())
        throw std::invalid_argument("unbound recursion variable '" + t.var_name() + "'");
      return it->second;
    }
    case GlobalType::Kind::Rec: {
      raw.entries.push_back({true, 0, {}});
      const std::size_t self = raw.entries.size() - 1;
      Env inner = env;
      inner[t.var_name()] = self;
      const std::size_t body = build(raw, t.body(), inner);
      raw.entries[self].target = body;
      return self;
    }
    case GlobalType::Kind::Choice: {
      raw.entries.push_back({});
      const std::size_t self = raw.entries.size() - 1;
      GlobalGraph::Node n;
      n.end = false;
      n.sender = t.sender();
      n.receiver = t.receiver();
      for (const auto& b : t.branches()) n.next.emplace_back(b.label, build(raw, b.cont, env));
      raw.entries[self].node = std::move(n);
      return self;
    }
  }
  return 0;
}

std::size_t build(RawGraph<ProcessGraph::Node>& raw, const Process& t, const Env& env) {
  switch (t.kind()) {
    case Process::Kind::Zero:
      raw.entries.push_back({});
      return raw.entries.size() - 1;
    case Process::Kind::Var: {
      auto it = env.find(t.var_name());
      if (it == env.end())
        throw std::invalid_argument("unbound recursion variable '" + t.var_name() + "'");
      return it->second;
    }
    case Process::Kind::Rec: {
      raw.entries.push_back({true, 0, {}});
      const std::size_t self = raw.entries.size() - 1;
      Env inner = env;
      inner[t.var_name()] = self;
      const std::size_t body = build(raw, t.body(), inner);
      raw.entries[self].target = body;
      return self;
    }
    case Process::Kind::Out:
    case Process::Kind::In: {
      raw.entries.push_back({});
      const std::size_t self = raw.entries.size() - 1;
      ProcessGraph::Node n;
      n.kind = t.kind() == Process::Kind::Out ? ProcessGraph::Kind::Out : ProcessGraph::Kind::In;
      n.partner = t.partner();
      for (const auto& b : t.branches()) n.next.emplace_back(b.label, build(raw, b.cont, env));
      raw.entries[self].node = std::move(n);
      return self;
    }
  }
  return 0;
}

std::string var_for(std::size_t node) { return "X" + std::to_string(node); }

// Folds a graph back into a term, introducing a binder on every node that is
// the target of a back-edge.
template <class Term, class Graph, class MakeNode>
Term fold(const Graph& g, std::size_t root, MakeNode make) {
  std::vector<char> on_path(g.size(), 0), looped(g.size(), 0);
  std::function<Term(std::size_t)> go = [&](std::size_t n) -> Term {
    if (on_path[n]) {
      looped[n] = 1;
      return Term::var(var_for(n));
    }
    on_path[n] = 1;
    const bool outer_loop = looped[n];
    looped[n] = 0;
    std::vector<typename Term::Branch> bs;
    for (const auto& [label, t] : g.nodes[n].next) bs.push_back({label, go(t)});
    Term body = make(g.nodes[n], std::move(bs));
    on_path[n] = 0;
    if (looped[n]) body = Term::rec(var_for(n), std::move(body));
    looped[n] = outer_loop;
    return body;
  };
  return go(root);
}

template <class Graph, class HeadEq>
bool bisim_pairs(const Graph& a, std::size_t na, const Graph& b, std::size_t nb, HeadEq heads) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<std::pair<std::size_t, std::size_t>> work{{na, nb}};
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if (!seen.insert({x, y}).second) continue;
    const auto& nx = a.nodes[x];
    const auto& ny = b.nodes[y];
    if (!heads(nx, ny) || nx.next.size() != ny.next.size()) return false;
    for (const auto& [label, tx] : nx.next) {
      const std::size_t* ty = ny.successor(label);
      if (!ty) return false;
      work.emplace_back(tx, *ty);
    }
  }
  return true;
}

}  // namespace

GlobalGraph GlobalGraph::from(const GlobalType& g) {
  RawGraph<Node> raw;
  const std::size_t root = build(raw, g, {});
  GlobalGraph out;
  out.nodes = raw.compact(root).first;
  return out;
}

GlobalType GlobalGraph::term(std::size_t node) const {
  return fold<GlobalType>(*this, node, [](const Node& n, std::vector<GlobalType::Branch> bs) {
    if (n.end) return GlobalType::end();
    return GlobalType::choice(n.sender, n.receiver, std::move(bs));
  });
}

std::vector<std::set<Participant>> GlobalGraph::reachable_participants() const {
  std::vector<std::set<Participant>> parts(nodes.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = nodes.size(); i-- > 0;) {
      const Node& n = nodes[i];
      if (n.end) continue;
      const std::size_t before = parts[i].size();
      parts[i].insert(n.sender);
      parts[i].insert(n.receiver);
      for (const auto& [label, t] : n.next) parts[i].insert(parts[t].begin(), parts[t].end());
      changed |= parts[i].size() != before;
    }
  }
  return parts;
}

ProcessGraph ProcessGraph::from(const Process& p) {
  RawGraph<Node> raw;
  const std::size_t root = build(raw, p, {});
  ProcessGraph out;
  out.nodes = raw.compact(root).first;
  out.root = 0;
  return out;
}

Process ProcessGraph::term(std::size_t node) const {
  return fold<Process>(*this, node, [](const Node& n, std::vector<Process::Branch> bs) {
    switch (n.kind) {
      case Kind::Zero: return Process::zero();
      case Kind::Out: return Process::out(n.partner, std::move(bs));
      case Kind::In: return Process::in(n.partner, std::move(bs));
    }
    return Process::zero();
  });
}

bool bisimilar(const GlobalGraph& a, std::size_t na, const GlobalGraph& b, std::size_t nb) {
  return bisim_pairs(a, na, b, nb, [](const GlobalGraph::Node& x, const GlobalGraph::Node& y) {
    if (x.end || y.end) return x.end == y.end;
    return x.sender == y.sender && x.receiver == y.receiver;
  });
}

bool bisimilar(const ProcessGraph& a, std::size_t na, const ProcessGraph& b, std::size_t nb) {
  return bisim_pairs(a, na, b, nb, [](const ProcessGraph::Node& x, const ProcessGraph::Node& y) {
    if (x.kind != y.kind) return false;
    return x.kind == ProcessGraph::Kind::Zero || x.partner == y.partner;
  });
}

bool regular_equal(const GlobalType& a, const GlobalType& b) {
  return bisimilar(GlobalGraph::from(a), 0, GlobalGraph::from(b), 0);
}

bool regular_equal(const Process& a, const Process& b) {
  const auto ga = ProcessGraph::from(a);
  const auto gb = ProcessGraph::from(b);
  return bisimilar(ga, ga.root, gb, gb.root);
}

std::set<Participant> participants_of(const GlobalType& g) {
  std::set<Participant> out;
  for (const auto& n : GlobalGraph::from(g).nodes) {
    if (n.end) continue;
    out.insert(n.sender);
    out.insert(n.receiver);
  }
  return out;
}

std::set<Trace> paths_to_depth(const GlobalGraph& g, std::size_t node, std::size_t depth) {
  std::set<Trace> out;
  Trace cur;
  std::function<void(std::size_t)> go = [&](std::size_t n) {
    if (cur.size() == depth) return;
    const auto& nd = g.nodes[n];
    for (const auto& [label, t] : nd.next) {
      cur.push_back({nd.sender, nd.receiver, label});
      out.insert(cur);
      go(t);
      cur.pop_back();
    }
  };
  go(node);
  return out;
}

std::set<Trace> paths_to_depth(const GlobalType& g, std::size_t depth) {
  return paths_to_depth(GlobalGraph::from(g), 0, depth);
}

GlobalType subterm_after(const GlobalType& g, const Trace& path) {
  GlobalType cur = g;
  for (const auto& a : path) {
    const GlobalType head = unfold(cur);
    if (!head.is_choice() || head.sender() != a.sender || head.receiver() != a.receiver)
      throw std::invalid_argument("'" + to_string(path) + "' is not a path of the global type");
    const GlobalType* next = head.branch(a.label);
    if (!next)
      throw std::invalid_argument("'" + to_string(path) + "' is not a path of the global type");
    cur = *next;
  }
  return cur;
}

bool is_path(const GlobalGraph& g, const Trace& path) {
  std::size_t cur = 0;
  for (const auto& a : path) {
    const auto& n = g.nodes[cur];
    if (n.end || n.sender != a.sender || n.receiver != a.receiver) return false;
    const std::size_t* next = n.successor(a.label);
    if (!next) return false;
    cur = *next;
  }
  return true;
}

}  // namespace mpst
