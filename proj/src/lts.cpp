#include "mpst/lts.hpp"

#include <functional>
#include <map>

#include "mpst/regular.hpp"

namespace mpst {

std::string state_key(const GlobalType& g) { return g.str(); }
std::string state_key(const Network& n) { return n.str(); }

std::optional<Network> step_network(const Network& n, const Communication& a) {
  const Process* sp = n.at(a.sender);
  const Process* rp = n.at(a.receiver);
  if (!sp || !rp) return std::nullopt;
  const Process out = unfold(*sp);
  const Process in = unfold(*rp);
  if (out.kind() != Process::Kind::Out || out.partner() != a.receiver) return std::nullopt;
  if (in.kind() != Process::Kind::In || in.partner() != a.sender) return std::nullopt;
  const Process* k1 = out.branch(a.label);
  const Process* k2 = in.branch(a.label);
  if (!k1 || !k2) return std::nullopt;
  return n.with(a.sender, *k1).with(a.receiver, *k2);
}

std::vector<std::pair<Communication, Network>> transitions(const Network& n) {
  std::vector<std::pair<Communication, Network>> out;
  for (const auto& [p, proc] : n.bindings()) {
    const Process head = unfold(proc);
    if (head.kind() != Process::Kind::Out) continue;
    for (const auto& b : head.branches()) {
      Communication a{p, head.partner(), b.label};
      if (auto next = step_network(n, a)) out.emplace_back(a, std::move(*next));
    }
  }
  return out;
}

namespace {

class GlobalLts {
 public:
  explicit GlobalLts(const GlobalType& root) {
    for (const auto& n : GlobalGraph::from(root).nodes)
      for (const auto& [label, t] : n.next) alphabet_.insert({n.sender, n.receiver, label});
  }

  std::optional<GlobalType> step(const GlobalType& g, const Communication& a) {
    std::set<std::pair<std::string, Communication>> active;
    return step(g, a, active);
  }

  const std::vector<std::pair<Communication, GlobalType>>& transitions(const GlobalType& g) {
    const std::string key = state_key(g);
    auto it = transitions_.find(key);
    if (it != transitions_.end()) return it->second;
    std::vector<std::pair<Communication, GlobalType>> out;
    for (const auto& a : alphabet_)
      if (auto next = step(g, a)) out.emplace_back(a, std::move(*next));
    return transitions_.emplace(key, std::move(out)).first->second;
  }

 private:
  using Key = std::pair<std::string, Communication>;

  std::optional<GlobalType> step(const GlobalType& g, const Communication& a,
                                 std::set<Key>& active) {
    Key key{state_key(g), a};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    // Icomm is inductive: a recursive call reaching the same state and
    // communication again denotes an infinite derivation.
    if (active.count(key)) return std::nullopt;
    const GlobalType head = unfold(g);
    std::optional<GlobalType> result;
    if (head.is_choice()) {
      if (a.involves(head.sender()) || a.involves(head.receiver())) {
        if (a.sender == head.sender() && a.receiver == head.receiver())
          if (const GlobalType* k = head.branch(a.label)) result = *k;
      } else {
        active.insert(key);
        std::vector<GlobalType::Branch> bs;
        bool all = true;
        for (const auto& b : head.branches()) {
          auto next = step(b.cont, a, active);
          if (!next) {
            all = false;
            break;
          }
          bs.push_back({b.label, std::move(*next)});
        }
        active.erase(key);
        if (all) result = GlobalType::choice(head.sender(), head.receiver(), std::move(bs));
      }
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

  std::set<Communication> alphabet_;
  std::map<Key, std::optional<GlobalType>> memo_;
  std::map<std::string, std::vector<std::pair<Communication, GlobalType>>> transitions_;
};

template <class State, class Next>
std::set<Trace> enumerate(const State& s, std::size_t depth, Next next) {
  std::set<Trace> out;
  Trace cur;
  std::function<void(const State&)> go = [&](const State& st) {
    if (cur.size() == depth) return;
    for (const auto& [a, target] : next(st)) {
      cur.push_back(a);
      out.insert(cur);
      go(target);
      cur.pop_back();
    }
  };
  go(s);
  return out;
}

// Breadth-first sweep up to `depth`; checks that no state has two distinct
// targets on the same communication.
template <class State, class Next>
bool deterministic(const State& s, std::size_t depth, Next next) {
  std::map<std::string, std::size_t> seen;  // key -> remaining depth explored
  std::vector<std::pair<State, std::size_t>> work{{s, depth}};
  while (!work.empty()) {
    auto [st, left] = work.back();
    work.pop_back();
    const std::string key = state_key(st);
    auto it = seen.find(key);
    if (it != seen.end() && it->second >= left) continue;
    seen[key] = left;
    if (left == 0) continue;
    std::map<Communication, std::string> targets;
    for (const auto& [a, target] : next(st)) {
      auto [pos, fresh] = targets.emplace(a, state_key(target));
      if (!fresh && pos->second != state_key(target)) return false;
      work.emplace_back(target, left - 1);
    }
  }
  return true;
}

}  // namespace

std::optional<GlobalType> step_global(const GlobalType& g, const Communication& a) {
  return GlobalLts(g).step(g, a);
}

std::vector<std::pair<Communication, GlobalType>> transitions(const GlobalType& g) {
  GlobalLts lts(g);
  return lts.transitions(g);
}

std::set<Trace> traces_of(const Network& n, std::size_t depth) {
  return enumerate(n, depth, [](const Network& s) { return transitions(s); });
}

std::set<Trace> traces_of(const GlobalType& g, std::size_t depth) {
  GlobalLts lts(g);
  return enumerate(g, depth, [&](const GlobalType& s) { return lts.transitions(s); });
}

TraceEquivalence trace_equivalent(const GlobalType& g, const Network& n, std::size_t depth) {
  const auto tg = traces_of(g, depth);
  const auto tn = traces_of(n, depth);
  TraceEquivalence r;
  auto ig = tg.begin();
  auto in = tn.begin();
  while (ig != tg.end() || in != tn.end()) {
    if (in == tn.end() || (ig != tg.end() && *ig < *in)) {
      r = {false, *ig, true};
      return r;
    }
    if (ig == tg.end() || *in < *ig) {
      r = {false, *in, false};
      return r;
    }
    ++ig;
    ++in;
  }
  return r;
}

bool lts_deterministic(const GlobalType& g, std::size_t depth) {
  GlobalLts lts(g);
  return deterministic(g, depth, [&](const GlobalType& s) { return lts.transitions(s); });
}

bool lts_deterministic(const Network& n, std::size_t depth) {
  return deterministic(n, depth, [](const Network& s) { return transitions(s); });
}

}  // namespace mpst
