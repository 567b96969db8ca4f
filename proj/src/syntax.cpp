#include "mpst/syntax.hpp"

#include <optional>
#include <stdexcept>

namespace mpst {

std::string Communication::str() const { return sender + " " + receiver + " " + label; }

std::set<Participant> participants(const Trace& t) {
  std::set<Participant> out;
  for (const auto& c : t) {
    out.insert(c.sender);
    out.insert(c.receiver);
  }
  return out;
}

std::string to_string(const Trace& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += " . ";
    s += t[i].str();
  }
  return s;
}

namespace {

template <class Branch>
void check_labels(const std::vector<Branch>& branches) {
  if (branches.empty()) throw std::invalid_argument("choice with no branches");
  std::set<Label> seen;
  for (const auto& b : branches)
    if (!seen.insert(b.label).second)
      throw std::invalid_argument("duplicate label '" + b.label + "'");
}

}  // namespace

// ---------------------------------------------------------------- GlobalType

struct GlobalType::Node {
  Kind kind = Kind::End;
  Participant sender, receiver;
  std::vector<Branch> branches;
  std::string var;
  std::optional<GlobalType> body;
};

GlobalType GlobalType::end() {
  static const auto node = std::make_shared<const Node>();
  return GlobalType(node);
}

GlobalType GlobalType::choice(Participant sender, Participant receiver,
                              std::vector<Branch> branches) {
  if (sender == receiver)
    throw std::invalid_argument("self-communication on participant '" + sender + "'");
  check_labels(branches);
  auto n = std::make_shared<Node>();
  n->kind = Kind::Choice;
  n->sender = std::move(sender);
  n->receiver = std::move(receiver);
  n->branches = std::move(branches);
  return GlobalType(std::move(n));
}

GlobalType GlobalType::message(Participant sender, Participant receiver, Label label,
                               GlobalType cont) {
  std::vector<Branch> bs;
  bs.push_back({std::move(label), std::move(cont)});
  return choice(std::move(sender), std::move(receiver), std::move(bs));
}

GlobalType GlobalType::rec(std::string var, GlobalType body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Rec;
  n->var = std::move(var);
  n->body = std::move(body);
  return GlobalType(std::move(n));
}

GlobalType GlobalType::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->var = std::move(name);
  return GlobalType(std::move(n));
}

GlobalType::Kind GlobalType::kind() const { return node_->kind; }
const Participant& GlobalType::sender() const { return node_->sender; }
const Participant& GlobalType::receiver() const { return node_->receiver; }
const std::vector<GlobalType::Branch>& GlobalType::branches() const { return node_->branches; }
const std::string& GlobalType::var_name() const { return node_->var; }

const GlobalType& GlobalType::body() const { return *node_->body; }

const GlobalType* GlobalType::branch(const Label& label) const {
  for (const auto& b : node_->branches)
    if (b.label == label) return &b.cont;
  return nullptr;
}

std::string GlobalType::str() const {
  switch (kind()) {
    case Kind::End:
      return "end";
    case Kind::Var:
      return var_name();
    case Kind::Rec:
      return "rec " + var_name() + ". " + body().str();
    case Kind::Choice: {
      std::string head = sender() + "->" + receiver();
      const auto& bs = branches();
      if (bs.size() == 1) return head + ":" + bs[0].label + "." + bs[0].cont.str();
      std::string s = head + "{";
      for (std::size_t i = 0; i < bs.size(); ++i) {
        if (i) s += ", ";
        s += bs[i].label + "; " + bs[i].cont.str();
      }
      return s + "}";
    }
  }
  return {};
}

bool operator==(const GlobalType& a, const GlobalType& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case GlobalType::Kind::End:
      return true;
    case GlobalType::Kind::Var:
      return a.var_name() == b.var_name();
    case GlobalType::Kind::Rec:
      return a.var_name() == b.var_name() && a.body() == b.body();
    case GlobalType::Kind::Choice: {
      if (a.sender() != b.sender() || a.receiver() != b.receiver()) return false;
      const auto& x = a.branches();
      const auto& y = b.branches();
      if (x.size() != y.size()) return false;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i].label != y[i].label || !(x[i].cont == y[i].cont)) return false;
      return true;
    }
  }
  return false;
}

// ------------------------------------------------------------------- Process

struct Process::Node {
  Kind kind = Kind::Zero;
  Participant partner;
  std::vector<Branch> branches;
  std::string var;
  std::optional<Process> body;
};

Process Process::zero() {
  static const auto node = std::make_shared<const Node>();
  return Process(node);
}

Process Process::action(Kind k, Participant partner, std::vector<Branch> branches) {
  check_labels(branches);
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->partner = std::move(partner);
  n->branches = std::move(branches);
  return Process(std::move(n));
}

Process Process::out(Participant partner, std::vector<Branch> branches) {
  return action(Kind::Out, std::move(partner), std::move(branches));
}

Process Process::in(Participant partner, std::vector<Branch> branches) {
  return action(Kind::In, std::move(partner), std::move(branches));
}

Process Process::rec(std::string var, Process body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Rec;
  n->var = std::move(var);
  n->body = std::move(body);
  return Process(std::move(n));
}

Process Process::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->var = std::move(name);
  return Process(std::move(n));
}

Process::Kind Process::kind() const { return node_->kind; }
const Participant& Process::partner() const { return node_->partner; }
const std::vector<Process::Branch>& Process::branches() const { return node_->branches; }
const std::string& Process::var_name() const { return node_->var; }

const Process& Process::body() const { return *node_->body; }

const Process* Process::branch(const Label& label) const {
  for (const auto& b : node_->branches)
    if (b.label == label) return &b.cont;
  return nullptr;
}

std::string Process::str() const {
  switch (kind()) {
    case Kind::Zero:
      return "0";
    case Kind::Var:
      return var_name();
    case Kind::Rec:
      return "rec " + var_name() + ". " + body().str();
    case Kind::Out:
    case Kind::In: {
      std::string head = partner() + (kind() == Kind::Out ? "!" : "?");
      const auto& bs = branches();
      if (bs.size() == 1) return head + bs[0].label + "." + bs[0].cont.str();
      std::string s = head + "{";
      for (std::size_t i = 0; i < bs.size(); ++i) {
        if (i) s += ", ";
        s += bs[i].label + "; " + bs[i].cont.str();
      }
      return s + "}";
    }
  }
  return {};
}

bool operator==(const Process& a, const Process& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Process::Kind::Zero:
      return true;
    case Process::Kind::Var:
      return a.var_name() == b.var_name();
    case Process::Kind::Rec:
      return a.var_name() == b.var_name() && a.body() == b.body();
    case Process::Kind::Out:
    case Process::Kind::In: {
      if (a.partner() != b.partner()) return false;
      const auto& x = a.branches();
      const auto& y = b.branches();
      if (x.size() != y.size()) return false;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i].label != y[i].label || !(x[i].cont == y[i].cont)) return false;
      return true;
    }
  }
  return false;
}

// ------------------------------------------------------------------- Network

Network::Network(std::map<Participant, Process> bindings) : bindings_(std::move(bindings)) {}

const Process* Network::at(const Participant& p) const {
  auto it = bindings_.find(p);
  return it == bindings_.end() ? nullptr : &it->second;
}

Process Network::process_of(const Participant& p) const {
  const Process* proc = at(p);
  return proc ? *proc : Process::zero();
}

Network Network::with(const Participant& p, Process proc) const {
  auto b = bindings_;
  b.insert_or_assign(p, std::move(proc));
  return Network(std::move(b));
}

std::set<Participant> Network::domain() const {
  std::set<Participant> d;
  for (const auto& [p, _] : bindings_) d.insert(p);
  return d;
}

std::string Network::str() const {
  std::string s;
  for (const auto& [p, proc] : bindings_) {
    if (!s.empty()) s += " | ";
    s += p + " :: " + proc.str();
  }
  return s;
}

// -------------------------------------------------------------- substitution

GlobalType substitute(const GlobalType& body, const std::string& var,
                      const GlobalType& replacement) {
  switch (body.kind()) {
    case GlobalType::Kind::End:
      return body;
    case GlobalType::Kind::Var:
      return body.var_name() == var ? replacement : body;
    case GlobalType::Kind::Rec:
      if (body.var_name() == var) return body;
      return GlobalType::rec(body.var_name(), substitute(body.body(), var, replacement));
    case GlobalType::Kind::Choice: {
      std::vector<GlobalType::Branch> bs;
      bs.reserve(body.branches().size());
      for (const auto& b : body.branches())
        bs.push_back({b.label, substitute(b.cont, var, replacement)});
      return GlobalType::choice(body.sender(), body.receiver(), std::move(bs));
    }
  }
  return body;
}

Process substitute(const Process& body, const std::string& var, const Process& replacement) {
  switch (body.kind()) {
    case Process::Kind::Zero:
      return body;
    case Process::Kind::Var:
      return body.var_name() == var ? replacement : body;
    case Process::Kind::Rec:
      if (body.var_name() == var) return body;
      return Process::rec(body.var_name(), substitute(body.body(), var, replacement));
    case Process::Kind::Out:
    case Process::Kind::In: {
      std::vector<Process::Branch> bs;
      bs.reserve(body.branches().size());
      for (const auto& b : body.branches())
        bs.push_back({b.label, substitute(b.cont, var, replacement)});
      return body.kind() == Process::Kind::Out ? Process::out(body.partner(), std::move(bs))
                                               : Process::in(body.partner(), std::move(bs));
    }
  }
  return body;
}

namespace {

// Leading recursion binders must end in a guard; a bare variable there means
// the term never reaches a communication.
template <class Term>
void check_head_guarded(const Term& t) {
  std::set<std::string> prefix;
  Term cur = t;
  while (cur.kind() == Term::Kind::Rec) {
    prefix.insert(cur.var_name());
    Term next = cur.body();
    cur = std::move(next);
  }
  if (cur.kind() == Term::Kind::Var) {
    if (prefix.count(cur.var_name()))
      throw std::invalid_argument("unguarded recursion on variable '" + cur.var_name() + "'");
    throw std::invalid_argument("unbound recursion variable '" + cur.var_name() + "'");
  }
}

}  // namespace

GlobalType unfold(const GlobalType& g) {
  check_head_guarded(g);
  GlobalType cur = g;
  while (cur.kind() == GlobalType::Kind::Rec) {
    GlobalType body = cur.body();
    cur = substitute(body, cur.var_name(), cur);
  }
  return cur;
}

Process unfold(const Process& p) {
  check_head_guarded(p);
  Process cur = p;
  while (cur.kind() == Process::Kind::Rec) {
    Process body = cur.body();
    cur = substitute(body, cur.var_name(), cur);
  }
  return cur;
}

}  // namespace mpst
