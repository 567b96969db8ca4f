#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "mpst/syntax.hpp"

namespace mpst {

/// Finite graph presentation of the regular tree denoted by a closed,
/// guarded global type. Nodes are Choice or End; recursion becomes
/// back-edges. Node 0 is the root and nodes are numbered breadth-first.
struct GlobalGraph {
  struct Node {
    bool end = true;
    Participant sender;
    Participant receiver;
    std::vector<std::pair<Label, std::size_t>> next;  // source order

    bool involves(const Participant& p) const { return !end && (sender == p || receiver == p); }
    const std::size_t* successor(const Label& l) const;
  };

  std::vector<Node> nodes;

  /// Throws std::invalid_argument on free variables or unguarded recursion.
  static GlobalGraph from(const GlobalType& g);

  std::size_t size() const { return nodes.size(); }
  /// Closed term denoting the subtree at `node`.
  GlobalType term(std::size_t node = 0) const;
  /// Participants occurring anywhere below each node.
  std::vector<std::set<Participant>> reachable_participants() const;
};

/// Same presentation for processes; nodes are 0, output or input choices.
struct ProcessGraph {
  enum class Kind { Zero, Out, In };
  struct Node {
    Kind kind = Kind::Zero;
    Participant partner;
    std::vector<std::pair<Label, std::size_t>> next;

    const std::size_t* successor(const Label& l) const;
  };

  std::vector<Node> nodes;
  std::size_t root = 0;

  static ProcessGraph from(const Process& p);
  std::size_t size() const { return nodes.size(); }
  Process term(std::size_t node) const;
  Process term() const { return term(root); }
};

/// True iff the two subtrees denote the same (possibly infinite) tree.
/// Branches are compared as label-indexed sets.
bool bisimilar(const GlobalGraph& a, std::size_t na, const GlobalGraph& b, std::size_t nb);
bool bisimilar(const ProcessGraph& a, std::size_t na, const ProcessGraph& b, std::size_t nb);

bool regular_equal(const GlobalType& a, const GlobalType& b);
bool regular_equal(const Process& a, const Process& b);

std::set<Participant> participants_of(const GlobalType& g);

/// All non-empty root paths of length at most `depth`, i.e. the bounded
/// trace set of the tree.
std::set<Trace> paths_to_depth(const GlobalType& g, std::size_t depth);
std::set<Trace> paths_to_depth(const GlobalGraph& g, std::size_t node, std::size_t depth);

/// Continuation of `g` after the path `path`. Throws std::invalid_argument
/// if `path` is not a path of `g`.
GlobalType subterm_after(const GlobalType& g, const Trace& path);

/// True iff `path` is a (possibly empty) root path of `g`.
bool is_path(const GlobalGraph& g, const Trace& path);

}  // namespace mpst
