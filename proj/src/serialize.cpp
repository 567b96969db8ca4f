#include "mpst/serialize.hpp"

#include <sstream>
#include <stdexcept>

#include "mpst/parser.hpp"

namespace mpst {

std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(const PrimeES& s) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !s.causality(i, j)) continue;
      bool direct = true;
      for (std::size_t k = 0; k < n && direct; ++k)
        direct = k == i || k == j || !(s.causality(i, k) && s.causality(k, j));
      if (direct) out.emplace_back(i, j);
    }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> minimal_conflicts(const PrimeES& s) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!s.conflict(i, j)) continue;
      bool minimal = true;
      for (std::size_t a = 0; a < n && minimal; ++a)
        for (std::size_t b = 0; b < n && minimal; ++b)
          if ((a != i || b != j) && s.causality(a, i) && s.causality(b, j) && s.conflict(a, b))
            minimal = false;
      if (minimal) out.emplace_back(i, j);
    }
  return out;
}

nlohmann::json to_json(const PrimeES& s) {
  nlohmann::json j;
  j["horizon"] = s.horizon;
  j["truncated"] = s.truncated;
  if (s.origin) j["origin"] = s.origin->str();
  j["events"] = nlohmann::json::array();
  for (const auto& e : s.events) j["events"].push_back(to_string(e.trace()));
  j["causality"] = nlohmann::json::array();
  for (auto [a, b] : covering_pairs(s)) j["causality"].push_back({a, b});
  j["conflict"] = nlohmann::json::array();
  for (auto [a, b] : minimal_conflicts(s)) j["conflict"].push_back({a, b});
  j["hereditary_closure"] = true;
  return j;
}

PrimeES pes_from_json(const nlohmann::json& j) {
  try {
    PrimeES s;
    s.horizon = j.at("horizon").get<std::size_t>();
    s.truncated = j.value("truncated", false);
    if (j.contains("origin")) s.origin = parse_global(j.at("origin").get<std::string>());
    for (const auto& e : j.at("events")) s.events.push_back(GEvent::of(parse_trace(e.get<std::string>())));
    const std::size_t n = s.events.size();
    auto index = [n](const nlohmann::json& v) {
      const auto i = v.get<std::size_t>();
      if (i >= n) throw std::invalid_argument("event index " + std::to_string(i) + " out of range");
      return i;
    };
    Relation cover(n);
    for (const auto& p : j.at("causality")) cover.set(index(p.at(0)), index(p.at(1)));
    s.causality = Relation(n);
    for (std::size_t i = 0; i < n; ++i) s.causality.set(i, i);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (cover(i, k)) s.causality.set(i, k);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t m = 0; m < n; ++m)
          if (s.causality(i, k) && s.causality(k, m)) s.causality.set(i, m);
    s.conflict = Relation(n);
    const bool closed = j.value("hereditary_closure", false);
    for (const auto& p : j.at("conflict")) {
      const std::size_t a = index(p.at(0)), b = index(p.at(1));
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (closed ? s.causality(a, x) && s.causality(b, y) : x == a && y == b) {
            s.conflict.set(x, y);
            s.conflict.set(y, x);
          }
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed event structure: ") + e.what());
  } catch (const ParseError& e) {
    throw std::invalid_argument(std::string("malformed event structure: ") + e.what());
  }
}

std::string to_dot(const PrimeES& s) {
  std::ostringstream out;
  out << "digraph pes {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < s.size(); ++i)
    out << "  e" << i << " [label=\"" << to_string(s.events[i].trace()) << "\"];\n";
  for (auto [a, b] : covering_pairs(s)) out << "  e" << a << " -> e" << b << ";\n";
  for (auto [i, j] : initial_conflicts(s.events))
    out << "  e" << i << " -> e" << j << " [style=dashed, dir=none];\n";
  out << "}\n";
  return out.str();
}

}  // namespace mpst
