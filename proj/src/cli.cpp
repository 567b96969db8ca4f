#include "mpst/cli.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "mpst/event_structure.hpp"
#include "mpst/lts.hpp"
#include "mpst/parser.hpp"
#include "mpst/semantic_wf.hpp"
#include "mpst/serialize.hpp"
#include "mpst/structure.hpp"
#include "mpst/typing.hpp"

namespace mpst {
namespace {

using nlohmann::json;

struct Config {
  std::size_t horizon = 8;
  std::size_t k_max = 3;
  std::size_t configs = 12;
  std::string format = "text";
  std::vector<std::string> files;
  std::vector<std::string> inline_inputs;
  std::string participant;
};

// Usage errors surfaced with exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> inputs(const Config& c, std::size_t expected) {
  std::vector<std::string> out;
  for (const auto& path : c.files) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    out.push_back(ss.str());
  }
  out.insert(out.end(), c.inline_inputs.begin(), c.inline_inputs.end());
  if (out.size() != expected)
    throw InputError("expected " + std::to_string(expected) + " input(s), got " +
                     std::to_string(out.size()));
  return out;
}

std::string where(std::size_t node) { return node == 0 ? "root" : "node " + std::to_string(node); }

std::string trace_text(const Trace& t) { return t.empty() ? "(empty)" : to_string(t); }

std::vector<Trace> by_length(const std::set<Trace>& ts) {
  std::vector<Trace> v(ts.begin(), ts.end());
  std::stable_sort(v.begin(), v.end(),
                   [](const Trace& a, const Trace& b) { return a.size() < b.size(); });
  return v;
}

json wf_json(const WfReport& r) {
  json j;
  j["projectable"] = r.projectable();
  if (!r.projectable())
    j["projection_witness"] = {{"participant", r.projection.participant},
                               {"node", *r.projection.failure.node},
                               {"subterm", r.projection.failure.subterm->str()},
                               {"reason", r.projection.failure.reason}};
  j["bounded"] = r.bounded();
  if (!r.bounded())
    j["boundedness_witness"] = {{"participant", r.boundedness.participant},
                                {"node", r.boundedness.node},
                                {"subterm", r.boundedness.subterm->str()}};
  j["well_formed"] = r.well_formed();
  return j;
}

json semproj_json(const PrimeES& s, const SemProjectability& r) {
  json j{{"semantically_projectable", r.ok}, {"horizon", r.horizon}};
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    j["counterexample"] = {{"first", s.events[c.first].str()},
                           {"second", s.events[c.second].str()},
                           {"extension", s.events[c.extension].str()},
                           {"participant", c.participant}};
  }
  return j;
}

json depth_json(const SemBoundedness& r) {
  json j{{"horizon", r.horizon}, {"k_max", r.k_max}, {"semantically_bounded", r.ok()}};
  if (r.compared_with) j["compared_with"] = *r.compared_with;
  j["table"] = json::array();
  for (const auto& e : r.entries) {
    json row{{"participant", e.participant}, {"k", e.k}, {"value", e.value},
             {"status", to_string(e.status)}};
    if (e.previous) row["previous"] = *e.previous;
    if (e.limit) row["limit"] = e.limit->str();
    j["table"].push_back(row);
  }
  return j;
}

void depth_text(std::ostream& out, const SemBoundedness& r) {
  out << "semantic depth at horizon " << r.horizon;
  if (r.compared_with) out << " (compared with horizon " << *r.compared_with << ")";
  out << ":\n";
  for (const auto& e : r.entries) {
    out << "  " << e.participant << " k=" << e.k << ": " << e.value;
    if (e.previous) out << " (was " << *e.previous << ")";
    if (e.limit) out << " sup " << e.limit->str();
    out << " " << to_string(e.status) << "\n";
  }
}

std::string summary(const WfReport& wf, const SemProjectability& sp) {
  std::string s;
  if (wf.well_formed()) {
    s = "well-formed";
  } else if (!wf.projectable()) {
    s = "not projectable (witness: " + wf.projection.participant + " at " +
        where(*wf.projection.failure.node) + ")";
  } else {
    s = "not bounded (witness: " + wf.boundedness.participant + " at " +
        where(wf.boundedness.node) + ")";
  }
  s += sp.ok ? "; PES semantically projectable" : "; PES not semantically projectable";
  return s + " at horizon " + std::to_string(sp.horizon);
}

int cmd_check(const Config& c, std::ostream& out, std::ostream& err) {
  const GlobalType g = parse_global(inputs(c, 1)[0]);
  const WfReport wf = well_formed(g);
  if (!wf.projectable())
    err << "warning: the global type is not projectable; its event structure is built anyway\n";
  const PrimeES s = build_pes(g, c.horizon);
  const SemProjectability sp = semantically_projectable(s);
  const SemBoundedness sb = sem_bounded(s, c.k_max);
  const PesValidation valid = validate_pes(s);
  const IcuResult icu = check_icu(s);
  const ConfigDeterminism det = check_config_determinism(s, c.configs);
  const NFreeReport nf = check_nfree_instance(s);
  const auto confusion = check_asymmetric_confusion(s);
  const bool pass = wf.well_formed() && sp.ok && sb.ok() && valid.ok && icu.ok && det.ok &&
                    nf.restricted_ok;

  if (c.format == "json") {
    json j;
    j["global"] = g.str();
    j["syntactic"] = wf_json(wf);
    j["events"] = s.size();
    j["truncated"] = s.truncated;
    j["semantic_projectability"] = semproj_json(s, sp);
    j["semantic_boundedness"] = depth_json(sb);
    j["valid_pes"] = valid.ok;
    if (!valid.ok) j["pes_violation"] = valid.violation;
    j["initial_conflict_uniformity"] = icu.ok;
    j["configuration_determinism"] = det.ok;
    j["nfree_restricted"] = nf.restricted_ok;
    j["nfree_census"] = json::array();
    for (const auto& e : nf.census) j["nfree_census"].push_back({{"relation", to_string(e.relation)},
                                                                 {"violations", e.violations}});
    j["nfree_census_skipped"] = nf.census_skipped;
    j["asymmetric_confusion"] = confusion.size();
    j["summary"] = summary(wf, sp);
    j["pass"] = pass;
    out << j.dump(2) << "\n";
    return pass ? kPass : kPropertyFailure;
  }

  out << "global type: " << g.str() << "\n";
  out << "projectable: ";
  if (wf.projectable())
    out << "yes\n";
  else
    out << "no (" << wf.projection.participant << " at " << where(*wf.projection.failure.node)
        << ": " << wf.projection.failure.reason << ")\n";
  out << "bounded: ";
  if (wf.bounded())
    out << "yes\n";
  else
    out << "no (" << wf.boundedness.participant << " delayed without bound in "
        << wf.boundedness.subterm->str() << ")\n";
  out << "event structure at horizon " << s.horizon << ": " << s.size() << " events"
      << (s.truncated ? " (truncated)" : "") << "\n";
  out << "semantically projectable at horizon " << s.horizon << ": " << (sp.ok ? "yes" : "no");
  if (sp.counterexample) {
    const auto& x = *sp.counterexample;
    out << " (" << s.events[x.first].str() << " # " << s.events[x.second].str() << ", "
        << s.events[x.extension].str() << " unmatched for " << x.participant << ")";
  }
  out << "\n";
  depth_text(out, sb);
  out << "valid PES: " << (valid.ok ? "yes" : "no (" + valid.violation + ")") << "\n";
  out << "initial conflict uniformity: " << (icu.ok ? "yes" : "no") << "\n";
  out << "configuration determinism (up to " << c.configs << " events): "
      << (det.ok ? "yes" : "no (" + det.reason + ")") << "\n";
  out << "N-freeness on covering pairs with initial conflict: "
      << (nf.restricted_ok ? "yes" : "no") << "\n";
  if (nf.census_skipped) {
    out << "N-freeness census: skipped\n";
  } else {
    out << "N-freeness census:";
    for (const auto& e : nf.census) out << " " << to_string(e.relation) << "=" << e.violations;
    out << "\n";
  }
  out << "asymmetric confusion: " << confusion.size() << " triple(s)\n";
  out << summary(wf, sp) << "\n";
  return pass ? kPass : kPropertyFailure;
}

int cmd_typecheck(const Config& c, std::ostream& out, std::ostream& /*err*/) {
  const auto in = inputs(c, 2);
  const Network n = parse_network(in[0]);
  const GlobalType g = parse_global(in[1]);
  const Typing t = typecheck(n, g);
  if (c.format == "json") {
    json j{{"typable", t.ok}};
    if (!t.ok) j["reason"] = t.reason;
    if (t.participant) j["participant"] = *t.participant;
    out << j.dump(2) << "\n";
  } else if (t.ok) {
    out << "typable\n";
  } else {
    out << "not typable: " << t.reason << "\n";
  }
  return t.ok ? kPass : kPropertyFailure;
}

int cmd_project(const Config& c, std::ostream& out, std::ostream& /*err*/) {
  const GlobalType g = parse_global(inputs(c, 1)[0]);
  std::set<Participant> targets;
  if (c.participant.empty())
    targets = participants_of(g);
  else
    targets = {c.participant};
  bool all = true;
  json j = json::object();
  for (const auto& p : targets) {
    const Projection pr = project(g, p);
    all = all && pr.defined();
    if (c.format == "json") {
      j[p] = pr.defined() ? json(pr.process->str())
                          : json{{"undefined", pr.reason}, {"node", *pr.node}};
    } else if (pr.defined()) {
      out << p << ": " << pr.process->str() << "\n";
    } else {
      out << p << ": undefined at " << where(*pr.node) << " (" << pr.reason << ")\n";
    }
  }
  if (c.format == "json") out << j.dump(2) << "\n";
  return all ? kPass : kPropertyFailure;
}

int cmd_trace(const Config& c, std::ostream& out, std::ostream& /*err*/) {
  const std::string text = inputs(c, 1)[0];
  const std::set<Trace> ts = text.find("::") != std::string::npos
                                 ? traces_of(parse_network(text), c.horizon)
                                 : traces_of(parse_global(text), c.horizon);
  if (c.format == "json") {
    json j = json::array();
    for (const auto& t : by_length(ts)) j.push_back(to_string(t));
    out << j.dump(2) << "\n";
  } else {
    for (const auto& t : by_length(ts)) out << to_string(t) << "\n";
  }
  return kPass;
}

int cmd_equiv(const Config& c, std::ostream& out, std::ostream& /*err*/) {
  const auto in = inputs(c, 2);
  const Network n = parse_network(in[0]);
  const GlobalType g = parse_global(in[1]);
  const TraceEquivalence r = trace_equivalent(g, n, c.horizon);
  if (c.format == "json") {
    json j{{"equivalent", r.equivalent}, {"depth", c.horizon}};
    if (r.witness) {
      j["witness"] = to_string(*r.witness);
      j["only_in"] = r.witness_in_global ? "global" : "network";
    }
    out << j.dump(2) << "\n";
  } else if (r.equivalent) {
    out << "equivalent at depth " << c.horizon << "\n";
  } else {
    out << "not equivalent at depth " << c.horizon << ": " << trace_text(*r.witness) << " only in "
        << (r.witness_in_global ? "the global type" : "the network") << "\n";
  }
  return r.equivalent ? kPass : kPropertyFailure;
}

int cmd_pes(const Config& c, std::ostream& out, std::ostream& err) {
  const GlobalType g = parse_global(inputs(c, 1)[0]);
  if (!projectable(g).ok)
    err << "warning: the global type is not projectable; its event structure is built anyway\n";
  const PrimeES s = build_pes(g, c.horizon);
  if (c.format == "json") {
    out << to_json(s).dump(2) << "\n";
  } else if (c.format == "dot") {
    out << to_dot(s);
  } else {
    out << s.size() << " events at horizon " << s.horizon << (s.truncated ? " (truncated)" : "")
        << "\n";
    for (std::size_t i = 0; i < s.size(); ++i) out << "  e" << i << " " << s.events[i].str() << "\n";
    out << "causality (covering):";
    for (auto [a, b] : covering_pairs(s)) out << " e" << a << "<e" << b;
    out << "\nconflict (minimal):";
    for (auto [a, b] : minimal_conflicts(s)) out << " e" << a << "#e" << b;
    out << "\n";
  }
  return kPass;
}

int cmd_compare(const Config& c, std::ostream& out, std::ostream& /*err*/) {
  const auto in = inputs(c, 2);
  const PrimeES a = build_pes(parse_global(in[0]), c.horizon);
  const PrimeES b = build_pes(parse_global(in[1]), c.horizon);
  const PesComparison cmp = pes_identical(a, b);
  std::string verdict = "identical";
  std::string detail;
  if (!cmp.identical) {
    verdict = pes_isomorphism(a, b) ? "isomorphic" : "different";
    detail = cmp.difference;
  }
  if (c.format == "json") {
    json j{{"verdict", verdict}, {"horizon", c.horizon}};
    if (!detail.empty()) j["difference"] = detail;
    out << j.dump(2) << "\n";
  } else {
    out << verdict;
    if (!detail.empty()) out << ": " << detail;
    out << "\n";
  }
  return cmp.identical ? kPass : kPropertyFailure;
}

int cmd_depth(const Config& c, std::ostream& out, std::ostream& /*err*/) {
  const GlobalType g = parse_global(inputs(c, 1)[0]);
  const Boundedness b = bounded(g);
  const SemBoundedness sb = sem_bounded(build_pes(g, c.horizon), c.k_max);
  if (c.format == "json") {
    json j;
    j["depth"] = json::object();
    for (const auto& p : participants_of(g)) j["depth"][p] = depth_global(p, g).str();
    j["bounded"] = b.ok;
    j["semantic"] = depth_json(sb);
    out << j.dump(2) << "\n";
  } else {
    for (const auto& p : participants_of(g)) out << "depth " << p << ": " << depth_global(p, g).str() << "\n";
    out << "bounded: " << (b.ok ? "yes" : "no (" + b.participant + " at " + where(b.node) + ")")
        << "\n";
    depth_text(out, sb);
  }
  return b.ok && sb.ok() ? kPass : kPropertyFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiparty session types and their event structures", "mpst"};
  app.require_subcommand(1);
  Config cfg;

  struct Sub {
    const char* name;
    const char* help;
    int (*run)(const Config&, std::ostream&, std::ostream&);
  };
  const Sub subs[] = {
      {"check", "syntactic, semantic and structural well-formedness", cmd_check},
      {"typecheck", "type a network (first input) against a global type", cmd_typecheck},
      {"project", "projections of a global type", cmd_project},
      {"trace", "traces of a global type or network", cmd_trace},
      {"equiv", "trace equivalence of a network and a global type", cmd_equiv},
      {"pes", "event structure of a global type", cmd_pes},
      {"compare", "compare the event structures of two global types", cmd_compare},
      {"depth", "syntactic and semantic depth", cmd_depth},
  };
  std::vector<std::pair<CLI::App*, const Sub*>> registered;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    auto positive = CLI::PositiveNumber;
    sub->add_option("--horizon", cfg.horizon, "trace length bound")->check(positive);
    sub->add_option("--kmax", cfg.k_max, "largest k for semantic depth")->check(positive);
    sub->add_option("--configs", cfg.configs, "configuration size bound")->check(positive);
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_option("--file", cfg.files, "read an input from a file (repeatable)");
    sub->add_option("inputs", cfg.inline_inputs, "inline inputs");
    if (std::string(s.name) == "project")
      sub->add_option("--participant", cfg.participant, "project onto one participant only");
    registered.emplace_back(sub, &s);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  for (auto [sub, s] : registered) {
    if (!sub->parsed()) continue;
    if (cfg.format == "dot" && std::string(s->name) != "pes") {
      err << "error: --format dot is only supported by 'pes'\n";
      return kInputError;
    }
    try {
      return s->run(cfg, out, err);
    } catch (const ParseError& e) {
      err << "error: " << e.what() << "\n";
      return kInputError;
    } catch (const InputError& e) {
      err << "error: " << e.what() << "\n";
      return kInputError;
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "\n";
      return kInputError;
    }
  }
  return kInputError;
}

}  // namespace mpst
