#pragma once

// Test-only helpers: a brute-force path decision by direct enumeration of
// right-movers, the small-list grammar enumerator, and swap replay checks.

#include <functional>
#include <map>
#include <random>
#include <set>
#include <optional>
#include <string>
#include <vector>

#include "swapreach/canonical.hpp"
#include "swapreach/core.hpp"
#include "swapreach/formula.hpp"
#include "swapreach/generators.hpp"
#include "swapreach/oracle.hpp"
#include "swapreach/path_solver.hpp"

namespace swapreach::testkit {

// Tries every z and every set of right-movers between z and x; each
// (right-mover, left-mover) pair must be rational at the edge fixed by the
// number of left-movers between them.
inline bool brute_force_path_form(const PathInstance& p) {
  const std::size_t n = p.size(), I = p.target(), K = p.edge_indices();
  if (!p.prefers(I, p.x(), I)) return false;
  for (std::size_t z = 0; z <= I; ++z) {
    std::vector<std::size_t> region;
    for (std::size_t y = z + 1; y + 1 < n; ++y) region.push_back(y);
    if (region.size() + 1 < K) continue;
    const std::size_t r = region.size();
    std::vector<bool> right(n, false);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) != K - 1) continue;
      std::fill(right.begin(), right.end(), false);
      right[z] = true;
      for (std::size_t k = 0; k < r; ++k)
        if (mask >> k & 1u) right[region[k]] = true;
      bool ok = true;
      for (std::size_t a = z; a < n && ok; ++a) {
        if (!right[a]) continue;
        std::size_t left_between = 0;
        for (std::size_t b = a + 1; b < n && ok; ++b) {
          if (right[b]) continue;
          ok = p.rational_at(a + left_between, a, b);
          ++left_between;
        }
      }
      if (ok) return true;
    }
  }
  return false;
}

inline bool brute_force_path(const Instance& inst) {
  if (auto t = trivial_decision(inst)) return *t;
  return brute_force_path_form(PathInstance(canonicalize_path(inst).instance));
}

enum class Shape { path, cycle };

// Every instance on a path or cycle of n agents with the given target,
// agent `holder` owns x and each list is drawn from the initial objects of the
// agent's neighbors and x, has length at most three and ends with the agent's
// own object.
inline std::size_t enumerate_grammar(Shape shape, std::size_t n, std::size_t target, std::size_t holder,
                                     const std::function<void(const Instance&)>& visit) {
  std::vector<std::vector<std::vector<std::size_t>>> options(n);
  auto neighbors = [&](std::size_t a) {
    std::vector<std::size_t> out;
    if (a > 0) out.push_back(a - 1);
    else if (shape == Shape::cycle) out.push_back(n - 1);
    if (a + 1 < n) out.push_back(a + 1);
    else if (shape == Shape::cycle) out.push_back(0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::size_t> support = neighbors(a);
    if (a != holder) support.push_back(holder);
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    auto& opts = options[a];
    auto offer = [&](std::vector<std::size_t> list) { opts.push_back(std::move(list)); };
    offer({a});
    for (std::size_t u : support) {
      offer({u, a});
      for (std::size_t v : support)
        if (v != u) offer({u, v, a});
    }
  }
  InstanceSpec base;
  for (std::size_t k = 0; k < n; ++k) {
    base.objects.push_back("o" + std::to_string(k + 1));
    base.initial.push_back(object_at(k));
  }
  for (std::size_t k = 0; k + 1 < n; ++k) base.edges.emplace_back(agent_at(k), agent_at(k + 1));
  if (shape == Shape::cycle && n > 2) base.edges.emplace_back(agent_at(n - 1), agent_at(0));
  base.target_agent = agent_at(target);
  base.target_object = object_at(holder);
  base.prefs.resize(n);

  std::vector<std::size_t> choice(n, 0);
  std::size_t count = 0;
  for (;;) {
    InstanceSpec spec = base;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t o : options[a][choice[a]]) spec.prefs[a].push_back(object_at(o));
    visit(Instance::create(std::move(spec)));
    ++count;
    std::size_t k = 0;
    while (k < n && ++choice[k] == options[k].size()) choice[k++] = 0;
    if (k == n) break;
  }
  return count;
}

struct ReplayFinding {
  bool ok = true;
  std::string what;
};

// Replays a certificate of a path-form instance and checks that x crosses each
// edge between the target and its start exactly once and that every swapped
// pair meets at the edge swap_edge predicts.
inline ReplayFinding check_swap_structure(const PathInstance& p, const SwapSequence& seq) {
  const std::size_t n = p.size();
  std::vector<std::size_t> held(n), where(n);
  for (std::size_t k = 0; k < n; ++k) held[k] = where[k] = k;
  std::vector<std::size_t> x_edges(n, 0);
  struct Met {
    std::size_t a, b, edge;
  };
  std::vector<Met> met;
  for (auto [u, v] : seq) {
    std::size_t i = std::min(idx(u), idx(v)), j = std::max(idx(u), idx(v));
    if (j != i + 1) return {false, "swap between non-neighbors"};
    std::size_t a = held[i], b = held[j];
    if (a == p.x() || b == p.x()) ++x_edges[i];
    met.push_back({a, b, i});
    std::swap(held[i], held[j]);
    where[held[i]] = i;
    where[held[j]] = j;
  }
  for (std::size_t e = 0; e + 1 < n; ++e) {
    std::size_t expected = e >= p.target() ? 1 : 0;
    if (x_edges[e] != expected)
      return {false, "x crosses edge " + std::to_string(e) + " " + std::to_string(x_edges[e]) + " times"};
  }
  for (const auto& m : met) {
    auto e1 = swap_edge(p, where[m.a], m.a, m.b);
    auto e2 = swap_edge(p, where[m.b], m.b, m.a);
    if (!e1 || *e1 != m.edge || !e2 || *e2 != m.edge)
      return {false, "objects " + p.name(m.a) + "," + p.name(m.b) + " met at edge " + std::to_string(m.edge) +
                         " but swap_edge gives " + (e1 ? std::to_string(*e1) : "none") + "/" +
                         (e2 ? std::to_string(*e2) : "none")};
  }
  return {};
}

namespace detail {

// Lists each agent would write down after the greedy run with the given
// right-movers: objects received, most recent first.
inline std::vector<std::vector<std::size_t>> greedy_histories(std::size_t n, std::size_t pz,
                                                              const std::vector<bool>& right) {
  std::vector<std::size_t> held(n);
  std::vector<std::vector<std::size_t>> h(n);
  for (std::size_t k = 0; k < n; ++k) {
    held[k] = k;
    h[k].push_back(k);
  }
  for (std::size_t k = pz; k + 1 < n;) {
    if (right[held[k]] && !right[held[k + 1]]) {
      std::swap(held[k], held[k + 1]);
      h[k].push_back(held[k]);
      h[k + 1].push_back(held[k + 1]);
      k = k > pz ? k - 1 : pz;
    } else {
      ++k;
    }
  }
  for (auto& l : h) std::reverse(l.begin(), l.end());
  return h;
}

// Random linear extension of two chains; nullopt if they disagree.
inline std::optional<std::vector<std::size_t>> merge_chains(const std::vector<std::size_t>& a,
                                                            const std::vector<std::size_t>& b, std::mt19937_64& rng) {
  std::map<std::size_t, std::set<std::size_t>> succ;
  std::map<std::size_t, int> indeg;
  auto add = [&](const std::vector<std::size_t>& c) {
    for (auto o : c) indeg[o];
    for (std::size_t k = 0; k + 1 < c.size(); ++k)
      if (succ[c[k]].insert(c[k + 1]).second) ++indeg[c[k + 1]];
  };
  add(a);
  add(b);
  std::vector<std::size_t> out, ready;
  for (auto [o, d] : indeg)
    if (!d) ready.push_back(o);
  while (!ready.empty()) {
    std::size_t k = std::uniform_int_distribution<std::size_t>(0, ready.size() - 1)(rng);
    std::size_t o = ready[k];
    ready.erase(ready.begin() + static_cast<std::ptrdiff_t>(k));
    out.push_back(o);
    for (auto s : succ[o])
      if (--indeg[s] == 0) ready.push_back(s);
  }
  if (out.size() != indeg.size()) return std::nullopt;
  return out;
}

}  // namespace detail

// Path-form instance with two planted solutions sharing z. Blocks with more
// than one type show up here and almost nowhere else.
inline Instance gen_twin_path(std::size_t n, std::uint64_t seed, bool perturb) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  const std::size_t I = uniform(0, n - 2), pz = uniform(0, I), K = n - 1 - I;
  std::vector<std::size_t> region;
  for (std::size_t k = pz + 1; k + 1 < n; ++k) region.push_back(k);
  auto pick = [&] {
    auto r = region;
    std::shuffle(r.begin(), r.end(), rng);
    std::vector<bool> right(n, false);
    right[pz] = true;
    for (std::size_t k = 0; k + 1 < K; ++k) right[r[k]] = true;
    return right;
  };
  auto h1 = detail::greedy_histories(n, pz, pick());
  auto h2 = detail::greedy_histories(n, pz, pick());
  InstanceSpec spec;
  for (std::size_t k = 0; k < n; ++k) {
    spec.objects.push_back("o" + std::to_string(k + 1));
    spec.initial.push_back(object_at(k));
  }
  for (std::size_t k = 0; k + 1 < n; ++k) spec.edges.emplace_back(agent_at(k), agent_at(k + 1));
  spec.prefs.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    auto merged = detail::merge_chains(h1[k], h2[k], rng);
    std::vector<std::size_t> l = merged ? *merged : h1[k];
    l.erase(std::find(l.begin(), l.end(), k));
    l.push_back(k);
    if (perturb && uniform(0, 5) == 0 && l.size() >= 3) {
      std::size_t q = uniform(0, l.size() - 3);
      std::swap(l[q], l[q + 1]);
    }
    for (auto o : l) spec.prefs[k].push_back(object_at(o));
  }
  spec.target_agent = agent_at(I);
  spec.target_object = object_at(n - 1);
  return Instance::create(std::move(spec));
}

// Mixed path instances for sweeps: plain random lists, planted sequences and
// twin plants.
inline Instance sweep_path_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + 17);
  auto uniform = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  switch (seed % 3) {
    case 0: {
      std::size_t n = uniform(2, 9);
      return gen_random(GraphKind::path, n, rng(), uniform(2, n));
    }
    case 1: return gen_planted_path(uniform(2, 8), rng());
    default: return gen_twin_path(uniform(4, 9), rng(), seed % 2);
  }
}

// Random formula where every variable occurs once negated and once or twice
// plainly, clause sizes in [min_size, 3] and no variable twice in a clause.
inline std::optional<Formula> random_shaped_formula(std::mt19937_64& rng, int vars, std::size_t min_size) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<int> lits;
    for (int v = 1; v <= vars; ++v) {
      lits.push_back(-v);
      lits.push_back(v);
      if (rng() % 2) lits.push_back(v);
    }
    std::shuffle(lits.begin(), lits.end(), rng);
    Formula f;
    f.variables = vars;
    std::size_t k = 0;
    while (k < lits.size()) {
      std::size_t size = std::min<std::size_t>(min_size + rng() % (4 - min_size), lits.size() - k);
      f.clauses.emplace_back(lits.begin() + static_cast<long>(k), lits.begin() + static_cast<long>(k + size));
      k += size;
    }
    bool ok = min_size == 1 ? !validate_caterpillar(f) : !validate_restricted(f);
    if (ok) return f;
  }
  return std::nullopt;
}

// Every formula over exactly `vars` variables with at most `max_clauses`
// clauses of size min_size..3 in which each variable occurs once negated and
// once or twice plainly. Clause order and literal order within a clause are
// both significant; literals inside a clause are listed by occurrence order.
inline std::size_t enumerate_shaped_formulas(int vars, std::size_t max_clauses, std::size_t min_size,
                                             const std::function<void(const Formula&)>& visit) {
  std::set<std::vector<std::vector<int>>> seen;
  for (std::uint32_t twice = 0; twice < (1u << vars); ++twice) {
    std::vector<int> lits;
    for (int v = 1; v <= vars; ++v) {
      lits.push_back(v);
      if (twice >> (v - 1) & 1u) lits.push_back(v);
      lits.push_back(-v);
    }
    for (std::size_t m = 1; m <= max_clauses; ++m) {
      if (lits.size() < m * min_size || lits.size() > 3 * m) continue;
      // every literal occurrence goes to one of m clauses
      std::vector<std::size_t> slot(lits.size(), 0);
      for (;;) {
        std::vector<std::vector<int>> clauses(m);
        for (std::size_t k = 0; k < lits.size(); ++k) clauses[slot[k]].push_back(lits[k]);
        bool ok = true;
        for (const auto& c : clauses) ok = ok && c.size() >= min_size && c.size() <= 3;
        if (ok) {
          Formula f;
          f.variables = vars;
          f.clauses = clauses;
          bool valid = min_size == 1 ? !validate_caterpillar(f) : !validate_restricted(f);
          if (valid) {
            // all orderings of literals within each clause
            std::function<void(std::size_t)> permute = [&](std::size_t j) {
              if (j == m) {
                if (seen.insert(f.clauses).second) visit(f);
                return;
              }
              auto& c = f.clauses[j];
              std::sort(c.begin(), c.end());
              do permute(j + 1);
              while (std::next_permutation(c.begin(), c.end()));
            };
            permute(0);
          }
        }
        std::size_t k = 0;
        while (k < slot.size() && ++slot[k] == m) slot[k++] = 0;
        if (k == slot.size()) break;
      }
    }
  }
  return seen.size();
}

}  // namespace swapreach::testkit
