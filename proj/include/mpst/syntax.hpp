#pragma once

#include <compare>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace mpst {

using Participant = std::string;
using Label = std::string;

/// A single synchronous communication `sender -> receiver : label`.
///
/// The defaulted ordering (sender, then receiver, then label) is the total
/// order used for trace normal forms.
struct Communication {
  Participant sender;
  Participant receiver;
  Label label;

  auto operator<=>(const Communication&) const = default;

  bool involves(const Participant& p) const { return sender == p || receiver == p; }
  bool same_channel(const Communication& o) const {
    return sender == o.sender && receiver == o.receiver;
  }
  /// True iff the two communications share a participant.
  bool depends_on(const Communication& o) const {
    return involves(o.sender) || involves(o.receiver);
  }
  std::string str() const;
};

using Trace = std::vector<Communication>;

std::set<Participant> participants(const Trace& t);
std::string to_string(const Trace& t);

/// Immutable global type term. Recursion is explicit (`rec X. G`); values
/// share structure and are cheap to copy.
class GlobalType {
 public:
  enum class Kind { End, Choice, Rec, Var };
  struct Branch;

  static GlobalType end();
  /// Throws std::invalid_argument on self-communication, empty or duplicate
  /// branch labels.
  static GlobalType choice(Participant sender, Participant receiver, std::vector<Branch> branches);
  static GlobalType message(Participant sender, Participant receiver, Label label,
                            GlobalType cont);
  static GlobalType rec(std::string var, GlobalType body);
  static GlobalType var(std::string name);

  Kind kind() const;
  const Participant& sender() const;
  const Participant& receiver() const;
  const std::vector<Branch>& branches() const;
  /// Continuation for `label`, or nullptr.
  const GlobalType* branch(const Label& label) const;
  const std::string& var_name() const;
  const GlobalType& body() const;

  bool is_end() const { return kind() == Kind::End; }
  bool is_choice() const { return kind() == Kind::Choice; }

  std::string str() const;

  /// Structural (syntactic) equality; see regular_equal for tree equality.
  friend bool operator==(const GlobalType& a, const GlobalType& b);

 private:
  struct Node;
  explicit GlobalType(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct GlobalType::Branch {
  Label label;
  GlobalType cont;
};

/// Immutable local process term: `0`, output/input choices, recursion.
class Process {
 public:
  enum class Kind { Zero, Out, In, Rec, Var };
  struct Branch;

  static Process zero();
  static Process out(Participant partner, std::vector<Branch> branches);
  static Process in(Participant partner, std::vector<Branch> branches);
  static Process rec(std::string var, Process body);
  static Process var(std::string name);

  Kind kind() const;
  const Participant& partner() const;
  const std::vector<Branch>& branches() const;
  const Process* branch(const Label& label) const;
  const std::string& var_name() const;
  const Process& body() const;

  bool is_zero() const { return kind() == Kind::Zero; }

  std::string str() const;
  friend bool operator==(const Process& a, const Process& b);

 private:
  struct Node;
  static Process action(Kind k, Participant partner, std::vector<Branch> branches);
  explicit Process(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Process::Branch {
  Label label;
  Process cont;
};

/// Parallel composition of located processes, one per participant.
class Network {
 public:
  Network() = default;
  explicit Network(std::map<Participant, Process> bindings);

  const std::map<Participant, Process>& bindings() const { return bindings_; }
  const Process* at(const Participant& p) const;
  /// Process of `p`, 0 when `p` is not bound.
  Process process_of(const Participant& p) const;
  Network with(const Participant& p, Process proc) const;
  std::set<Participant> domain() const;
  std::string str() const;

  friend bool operator==(const Network&, const Network&) = default;

 private:
  std::map<Participant, Process> bindings_;
};

/// Capture-free substitution `body[var := replacement]`; `replacement` is
/// expected to be closed.
GlobalType substitute(const GlobalType& body, const std::string& var, const GlobalType& replacement);
Process substitute(const Process& body, const std::string& var, const Process& replacement);

/// Head normal form: unfolds top-level recursion until a Choice or End.
/// Throws std::invalid_argument on a free variable or unguarded recursion.
GlobalType unfold(const GlobalType& g);
Process unfold(const Process& p);

}  // namespace mpst
