#include "mpst/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "mpst/semantic_wf.hpp"

namespace mpst {

RelationTriple relation_triple(const PrimeES& s) {
  const std::size_t n = s.size();
  RelationTriple t{Relation(n), Relation(n), Relation(n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (s.causality(i, j) || s.causality(j, i)) t.diamond.set(i, j);
      if (s.conflict(i, j)) t.conflict.set(i, j);
      if (s.concurrent(i, j)) t.concurrency.set(i, j);
    }
  return t;
}

std::optional<std::pair<std::size_t, std::size_t>> partition_violation(const PrimeES& s) {
  const RelationTriple t = relation_triple(s);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (i == j) continue;
      const int count = t.diamond(i, j) + t.conflict(i, j) + t.concurrency(i, j);
      if (count != 1) return std::make_pair(i, j);
    }
  return std::nullopt;
}

IcuResult check_icu(const PrimeES& s) {
  const std::size_t n = s.size();
  Relation in(n);
  for (const auto& [i, j] : initial_conflicts(s.events)) {
    in.set(i, j);
    in.set(j, i);
  }

  IcuResult res;
  // Bron-Kerbosch without pivoting.
  std::function<void(std::vector<std::size_t>, std::vector<std::size_t>, std::vector<std::size_t>)>
      bk = [&](std::vector<std::size_t> r, std::vector<std::size_t> p, std::vector<std::size_t> x) {
        if (p.empty() && x.empty()) {
          if (r.size() >= 2) {
            std::sort(r.begin(), r.end());
            res.cliques.push_back(r);
          }
          return;
        }
        while (!p.empty()) {
          const std::size_t v = p.front();
          std::vector<std::size_t> np, nx;
          for (std::size_t u : p)
            if (in(v, u)) np.push_back(u);
          for (std::size_t u : x)
            if (in(v, u)) nx.push_back(u);
          auto nr = r;
          nr.push_back(v);
          bk(nr, np, nx);
          p.erase(p.begin());
          x.push_back(v);
        }
      };
  std::vector<std::size_t> all;
  for (std::size_t i = 0; i < n; ++i) {
    bool any = false;
    for (std::size_t j = 0; j < n && !any; ++j) any = in(i, j);
    if (any) all.push_back(i);
  }
  bk({}, all, {});
  std::sort(res.cliques.begin(), res.cliques.end());

  for (const auto& c : res.cliques)
    for (std::size_t k = 1; k < c.size(); ++k)
      if (!s.events[c[k]].cm().same_channel(s.events[c[0]].cm())) {
        res.ok = false;
        res.witness = std::make_pair(c[0], c[k]);
        return res;
      }
  return res;
}

ConfigDeterminism check_config_determinism(const PrimeES& s, std::size_t max_size) {
  ConfigDeterminism res;
  if (max_size == 0) return res;
  for (const auto& x : configurations(s, max_size - 1)) {
    std::vector<std::size_t> ext;
    for (std::size_t e = 0; e < s.size(); ++e) {
      if (std::binary_search(x.begin(), x.end(), e)) continue;
      Configuration y = x;
      y.insert(std::upper_bound(y.begin(), y.end(), e), e);
      if (is_configuration(s, y)) ext.push_back(e);
    }
    for (std::size_t a = 0; a < ext.size(); ++a)
      for (std::size_t b = a + 1; b < ext.size(); ++b) {
        const auto& ca = s.events[ext[a]].cm();
        const auto& cb = s.events[ext[b]].cm();
        std::string reason;
        if (ca == cb)
          reason = "two extensions with the same communication";
        else if (!s.conflict(ext[a], ext[b]) && ca.depends_on(cb))
          reason = "non-conflicting extensions share a participant";
        if (!reason.empty()) return {false, x, ext[a], ext[b], reason};
      }
  }
  return res;
}

namespace {

bool strictly_below(const PrimeES& s, std::size_t i, std::size_t j) {
  return i != j && s.causality(i, j);
}

}  // namespace

std::vector<Triple> check_asymmetric_confusion(const PrimeES& s) {
  std::vector<Triple> out;
  for (std::size_t e = 0; e < s.size(); ++e)
    for (std::size_t e1 = 0; e1 < s.size(); ++e1) {
      if (!strictly_below(s, e, e1)) continue;
      for (std::size_t e2 = 0; e2 < s.size(); ++e2)
        if (s.conflict(e1, e2) && s.concurrent(e2, e)) out.push_back({e, e1, e2});
    }
  return out;
}

std::vector<Triple> check_reverse_confusion(const PrimeES& s) {
  std::vector<Triple> out;
  for (std::size_t e = 0; e < s.size(); ++e)
    for (std::size_t e1 = 0; e1 < s.size(); ++e1) {
      if (!strictly_below(s, e1, e)) continue;
      for (std::size_t e2 = 0; e2 < s.size(); ++e2)
        if (s.conflict(e1, e2) && s.concurrent(e2, e)) out.push_back({e, e1, e2});
    }
  return out;
}

std::string to_string(NRelation r) {
  switch (r) {
    case NRelation::Causality: return "causality";
    case NRelation::Conflict: return "conflict";
    case NRelation::Concurrency: return "concurrency";
  }
  return {};
}

namespace {

// Violations of
//   e0 R e1, e0 D e2, e2 R e3, e1 D e3, extra(e1, e3), e0 R e3  =>  e2 R e1
// where D is the complement of the reflexive-symmetric closure of R.
template <class Rel, class Extra>
std::pair<std::size_t, std::optional<Quad>> n_violations(std::size_t n, Rel rel, Extra extra,
                                                         bool stop_at_first) {
  auto apart = [&](std::size_t a, std::size_t b) { return a != b && !rel(a, b) && !rel(b, a); };
  std::vector<std::vector<std::size_t>> succ(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rel(i, j)) succ[i].push_back(j);
  std::size_t count = 0;
  std::optional<Quad> first;
  for (std::size_t e0 = 0; e0 < n; ++e0)
    for (std::size_t e1 : succ[e0])
      for (std::size_t e2 = 0; e2 < n; ++e2) {
        if (!apart(e0, e2) || rel(e2, e1)) continue;
        for (std::size_t e3 : succ[e2]) {
          if (!rel(e0, e3) || !apart(e1, e3) || !extra(e1, e3)) continue;
          ++count;
          if (!first) first = Quad{e0, e1, e2, e3};
          if (stop_at_first) return {count, first};
        }
      }
  return {count, first};
}

}  // namespace

NFreeReport check_nfree_instance(const PrimeES& s, std::size_t census_limit) {
  const std::size_t n = s.size();
  NFreeReport res;

  Relation cover(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!strictly_below(s, i, j)) continue;
      bool direct = true;
      for (std::size_t k = 0; k < n && direct; ++k)
        direct = !(strictly_below(s, i, k) && strictly_below(s, k, j));
      if (direct) cover.set(i, j);
    }
  Relation in(n);
  for (const auto& [i, j] : initial_conflicts(s.events)) {
    in.set(i, j);
    in.set(j, i);
  }

  auto [rc, rw] = n_violations(
      n, [&](std::size_t a, std::size_t b) { return cover(a, b); },
      [&](std::size_t a, std::size_t b) { return in(a, b); }, true);
  res.restricted_ok = rc == 0;
  res.restricted_witness = rw;

  if (n > census_limit) {
    res.census_skipped = true;
    return res;
  }
  auto any = [](std::size_t, std::size_t) { return true; };
  auto add = [&](NRelation r, auto rel) {
    auto [c, w] = n_violations(n, rel, any, false);
    res.census.push_back({r, c, w});
  };
  add(NRelation::Causality, [&](std::size_t a, std::size_t b) { return strictly_below(s, a, b); });
  add(NRelation::Conflict, [&](std::size_t a, std::size_t b) { return s.conflict(a, b); });
  add(NRelation::Concurrency, [&](std::size_t a, std::size_t b) { return s.concurrent(a, b); });
  return res;
}

Reconstruction reconstruct_from_configs(const PrimeES& s, std::size_t max_size) {
  const std::size_t n = s.size();
  Reconstruction res;

  // The least configuration containing e is its downward closure; prime
  // configurations are exactly those with a unique maximal element.
  std::vector<std::vector<char>> member(n, std::vector<char>(n, 0));
  for (std::size_t e = 0; e < n; ++e) {
    Configuration c;
    for (std::size_t j = 0; j < n; ++j)
      if (s.causality(j, e)) {
        member[e][j] = 1;
        c.push_back(j);
      }
    if (c.size() > max_size) {
      res.error = "principal ideal of " + s.events[e].str() + " has " + std::to_string(c.size()) +
                  " events, above the bound " + std::to_string(max_size);
      return res;
    }
    res.primes.push_back(std::move(c));
  }
  res.ok = true;

  auto fail = [&](std::string why) {
    if (res.mismatch.empty()) res.mismatch = std::move(why);
    res.isomorphic = false;
  };
  res.isomorphic = true;
  for (std::size_t e = 0; e < n; ++e) {
    if (!is_configuration(s, res.primes[e]))
      fail("downward closure of " + s.events[e].str() + " is not a configuration");
    std::size_t maximal = 0;
    for (std::size_t j : res.primes[e]) {
      bool top = true;
      for (std::size_t k : res.primes[e]) top = top && !strictly_below(s, j, k);
      maximal += top;
    }
    if (maximal != 1) fail("closure of " + s.events[e].str() + " has several maximal events");
  }

  res.pes.events = s.events;
  res.pes.origin = s.origin;
  res.pes.horizon = s.horizon;
  res.pes.truncated = s.truncated;
  res.pes.causality = Relation(n);
  res.pes.conflict = Relation(n);
  // Events in conflict with some member of each ideal.
  std::vector<std::vector<char>> clash(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i : res.primes[a])
      for (std::size_t j = 0; j < n; ++j)
        if (s.conflict(i, j)) clash[a][j] = 1;
  std::vector<char> internal(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i : res.primes[a]) internal[a] = internal[a] || clash[a][i];
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      bool subset = true;
      for (std::size_t k : res.primes[a]) subset = subset && member[b][k];
      if (subset) res.pes.causality.set(a, b);
      // The union of two ideals is downward closed, so it is a configuration
      // iff it is conflict-free.
      bool inconsistent = internal[a] || internal[b];
      for (std::size_t k : res.primes[b]) inconsistent = inconsistent || clash[a][k];
      if (inconsistent) res.pes.conflict.set(a, b);
      if (a != b && res.primes[a] == res.primes[b])
        fail("events " + s.events[a].str() + " and " + s.events[b].str() + " share an ideal");
    }
  if (!(res.pes.causality == s.causality)) fail("inclusion of ideals differs from causality");
  if (!(res.pes.conflict == s.conflict)) fail("inconsistency of ideals differs from conflict");
  return res;
}

PesComparison pes_identical(const PrimeES& a, const PrimeES& b) {
  if (a.horizon != b.horizon)
    throw std::invalid_argument("horizon mismatch: " + std::to_string(a.horizon) + " vs " +
                                std::to_string(b.horizon));
  std::set<GEvent> ea(a.events.begin(), a.events.end());
  std::set<GEvent> eb(b.events.begin(), b.events.end());
  for (const auto& e : ea)
    if (!eb.count(e)) return {false, "event " + e.str() + " only in the first structure"};
  for (const auto& e : eb)
    if (!ea.count(e)) return {false, "event " + e.str() + " only in the second structure"};
  std::map<GEvent, std::size_t> index;
  for (std::size_t i = 0; i < b.size(); ++i) index.emplace(b.events[i], i);
  std::vector<std::size_t> to(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) to[i] = index.at(a.events[i]);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      const std::size_t bi = to[i];
      const std::size_t bj = to[j];
      auto pair = [&] { return a.events[i].str() + ", " + a.events[j].str(); };
      if (a.causality(i, j) != b.causality(bi, bj)) return {false, "causality differs on " + pair()};
      if (a.conflict(i, j) != b.conflict(bi, bj)) return {false, "conflict differs on " + pair()};
    }
  return {};
}

std::optional<std::vector<std::size_t>> pes_isomorphism(const PrimeES& a, const PrimeES& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return std::nullopt;
  auto signature = [](const PrimeES& s, std::size_t i) {
    std::size_t below = 0, above = 0, conf = 0;
    for (std::size_t j = 0; j < s.size(); ++j) {
      below += s.causality(j, i);
      above += s.causality(i, j);
      conf += s.conflict(i, j);
    }
    return std::make_tuple(s.events[i].cm(), below, above, conf);
  };
  std::vector<std::vector<std::size_t>> candidates(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (signature(a, i) == signature(b, j)) candidates[i].push_back(j);

  std::vector<std::size_t> map(n, n);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> assign = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t j : candidates[i]) {
      if (used[j]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) {
        const std::size_t m = map[k];
        ok = a.causality(i, k) == b.causality(j, m) && a.causality(k, i) == b.causality(m, j) &&
             a.conflict(i, k) == b.conflict(j, m);
      }
      if (!ok) continue;
      map[i] = j;
      used[j] = 1;
      if (assign(i + 1)) return true;
      used[j] = 0;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return map;
}

}  // namespace mpst
