#pragma once

// Instance generators: the two SAT reductions (complete graph with lists of
// length at most four, generalized caterpillar) and seeded random instances.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "swapreach/canonical.hpp"
#include "swapreach/core.hpp"
#include "swapreach/formula.hpp"

namespace swapreach {

namespace detail {

// Agents are added with their initial object; lists are stored by name and
// resolved once every object exists.
class InstanceBuilder {
 public:
  Agent agent(const std::string& name, const std::string& initial) {
    if (object_ids_.count(initial)) throw InternalError("object '" + initial + "' handed out twice");
    object_ids_[initial] = object_at(objects_.size());
    objects_.push_back(initial);
    agents_.push_back(name);
    lists_.emplace_back();
    return agent_at(agents_.size() - 1);
  }
  // `above` is the part of the list strictly above the initial object.
  void prefer(Agent a, std::vector<std::string> above) {
    above.push_back(objects_[idx(a)]);
    lists_[idx(a)] = std::move(above);
  }
  void edge(Agent u, Agent v) { edges_.emplace_back(u, v); }
  void complete_graph() {
    for (std::size_t u = 0; u < agents_.size(); ++u)
      for (std::size_t v = u + 1; v < agents_.size(); ++v) edge(agent_at(u), agent_at(v));
  }
  std::size_t size() const { return agents_.size(); }

  Instance finish(Agent target, const std::string& target_object) const {
    InstanceSpec spec;
    spec.objects = objects_;
    spec.agent_names = agents_;
    for (std::size_t a = 0; a < agents_.size(); ++a) {
      spec.initial.push_back(object_at(a));
      std::vector<Object> list;
      const auto& names = lists_[a].empty() ? std::vector<std::string>{objects_[a]} : lists_[a];
      for (const auto& nm : names) list.push_back(lookup(nm));
      spec.prefs.push_back(std::move(list));
    }
    spec.edges = edges_;
    spec.target_agent = target;
    spec.target_object = lookup(target_object);
    return Instance::create(std::move(spec));
  }

 private:
  Object lookup(const std::string& nm) const {
    auto it = object_ids_.find(nm);
    if (it == object_ids_.end()) throw InternalError("generator references unknown object '" + nm + "'");
    return it->second;
  }

  std::vector<std::string> agents_, objects_;
  std::vector<std::vector<std::string>> lists_;
  std::vector<std::pair<Agent, Agent>> edges_;
  std::map<std::string, Object> object_ids_;
};

inline std::string sub(const std::string& base, std::size_t i) { return base + "_" + std::to_string(i); }
inline std::string subsup(const std::string& base, std::size_t i, std::size_t z) {
  return base + "_" + std::to_string(i) + "^" + std::to_string(z);
}

}  // namespace detail

/// Complete-graph reduction. Every list has length at most four.
inline Instance gen_clique_instance(const RestrictedFormula& f) {
  if (auto why = validate_restricted(f)) throw InputError("formula not restricted: " + *why);
  using detail::sub;
  using detail::subsup;
  const std::size_t m = f.clauses.size();
  const auto occ = occurrences(f);

  // position of literal l in clause j (1-based, written order)
  auto fpos = [&](std::size_t j, int lit) {
    const auto& c = f.clauses[j];
    return static_cast<std::size_t>(std::find(c.begin(), c.end(), lit) - c.begin()) + 1;
  };
  auto occ_count = [&](int v) { return 1 + occ[static_cast<std::size_t>(v)].positive.size(); };
  auto tau = [&](std::size_t j, int lit) {
    auto v = static_cast<std::size_t>(std::abs(lit));
    const auto& o = occ[v];
    if (lit < 0) return subsup("x", v, o.positive.size() == 1 ? 1 : 2);
    return subsup("x", v, static_cast<std::size_t>(o.positive[0]) == j ? 1 : 2);
  };

  detail::InstanceBuilder b;
  for (std::size_t j = 1; j <= m; ++j) {
    const auto& c = f.clauses[j - 1];
    Agent A = b.agent(sub("A", j), j == 1 ? std::string("x") : sub("a", j - 1));
    std::vector<std::string> bs;
    for (std::size_t z = 1; z <= c.size(); ++z) bs.push_back(subsup("b", j, z));
    b.prefer(A, bs);
    std::vector<Agent> Bs;
    for (std::size_t z = 1; z <= c.size(); ++z) Bs.push_back(b.agent(subsup("B", j, z), subsup("b", j, z)));
    for (std::size_t z = 1; z <= c.size(); ++z) {
      int lit = c[z - 1];
      std::vector<std::string> above{tau(j - 1, lit), "x"};
      if (j >= 2) above.push_back(sub("a", j - 1));
      b.prefer(Bs[z - 1], above);
    }
    for (std::size_t z = 1; z <= c.size(); ++z) {
      Agent D = b.agent(subsup("D", j, z), subsup("d", j, z));
      b.prefer(D, {sub("a", j), "x", tau(j - 1, c[z - 1])});
    }
  }
  for (int v = 1; v <= f.variables; ++v) {
    const auto& o = occ[static_cast<std::size_t>(v)];
    auto i = static_cast<std::size_t>(v);
    std::size_t nu = static_cast<std::size_t>(o.negative[0]);
    std::size_t p1 = static_cast<std::size_t>(o.positive[0]);
    std::string d_nu = subsup("d", nu + 1, fpos(nu, -v));
    std::string d_p1 = subsup("d", p1 + 1, fpos(p1, v));
    if (occ_count(v) == 2) {
      Agent X = b.agent(subsup("X", i, 1), subsup("x", i, 1));
      b.prefer(X, {d_p1, d_nu});
    } else {
      std::size_t p2 = static_cast<std::size_t>(o.positive[1]);
      Agent X1 = b.agent(subsup("X", i, 1), subsup("x", i, 2));
      b.prefer(X1, {d_p1, subsup("x", i, 1), d_nu});
      Agent X2 = b.agent(subsup("X", i, 2), subsup("x", i, 1));
      b.prefer(X2, {subsup("d", p2 + 1, fpos(p2, v)), subsup("x", i, 2)});
    }
  }
  Agent I = b.agent("I", sub("a", m));
  b.prefer(I, {"x"});
  b.complete_graph();
  Instance inst = b.finish(I, "x");
  if (inst.max_list_length() > 4) throw InternalError("clique reduction produced a list longer than four");
  return inst;
}

/// Caterpillar reduction. Target: agent C_m and object t.
inline Instance gen_caterpillar_instance(const RestrictedFormula& f) {
  if (auto why = validate_caterpillar(f)) throw InputError("formula not in two-positive-one-negative shape: " + *why);
  using detail::sub;
  const std::size_t n = static_cast<std::size_t>(f.variables);
  const std::size_t m = f.clauses.size();
  const auto occ = occurrences(f);

  // literal object for the occurrence of `lit` in clause j (0-based)
  auto literal_object = [&](std::size_t j, int lit) {
    auto v = static_cast<std::size_t>(std::abs(lit));
    if (lit < 0) return sub("xbar", v);
    return sub("x", v) + (static_cast<std::size_t>(occ[v].positive[0]) == j ? "^p1" : "^p2");
  };
  auto ell = [&](std::size_t j) {  // {l_j}, 1-based, formula order
    std::vector<std::string> out;
    for (int lit : f.clauses[j - 1]) out.push_back(literal_object(j - 1, lit));
    return out;
  };
  auto c_name = [&](std::size_t k) { return sub("c", k); };
  auto append = [](std::vector<std::string>& to, const std::vector<std::string>& from) {
    to.insert(to.end(), from.begin(), from.end());
  };

  detail::InstanceBuilder b;
  struct Gadget {
    Agent D1, X1, Xn, H;
    std::optional<Agent> X2;
  };
  std::vector<Gadget> gadgets;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& o = occ[i];
    const bool two = o.positive.size() == 2;
    auto clause_obj = [&](int clause0) { return c_name(m - static_cast<std::size_t>(clause0)); };  // c_{m-p+1}
    Gadget g{};
    g.D1 = b.agent(sub("D", i) + "^1", sub("+", i));
    b.prefer(g.D1, {sub("v", i), sub("-", i)});
    Agent D2 = b.agent(sub("D", i) + "^2", sub("-", i));
    b.prefer(D2, {sub("+", i)});
    g.X1 = b.agent(sub("X", i) + "^p1", two ? sub("++", i) : sub("p", i));
    b.prefer(g.X1, {clause_obj(o.positive[0]), sub("x", i) + "^p1", sub("+", i)});
    Agent P1 = b.agent(sub("P", i) + "^1", sub("x", i) + "^p1");
    b.prefer(P1, {sub("+", i)});
    b.edge(g.D1, D2);
    b.edge(g.X1, P1);
    if (two) {
      g.X2 = b.agent(sub("X", i) + "^p2", sub("p", i));
      b.prefer(*g.X2, {clause_obj(o.positive[1]), sub("x", i) + "^p2", sub("++", i)});
      Agent P2 = b.agent(sub("P", i) + "^2", sub("x", i) + "^p2");
      b.prefer(P2, {sub("++", i)});
      b.edge(*g.X2, P2);
    }
    g.Xn = b.agent(sub("Xbar", i), sub("n", i));
    b.prefer(g.Xn, {clause_obj(o.negative[0]), sub("xbar", i), sub("-", i)});
    Agent N = b.agent(sub("N", i), sub("xbar", i));
    b.prefer(N, {sub("-", i)});
    b.edge(g.Xn, N);
    g.H = b.agent(sub("H", i), i == n ? c_name(m) : sub("v", i + 1));
    b.prefer(g.H, {sub("p", i), sub("n", i)});
    gadgets.push_back(g);
  }

  Agent Cm = b.agent(sub("C", m), sub("v", 1));
  {
    std::vector<std::string> list{"t"};
    for (std::size_t k = m; k >= 1; --k) {
      append(list, ell(k));
      list.push_back(c_name(m - k + 1));
    }
    for (std::size_t i = n; i >= 1; --i) {
      list.push_back(sub("p", i));
      list.push_back(sub("n", i));
      list.push_back(sub("-", i));
      if (gadgets[i - 1].X2) list.push_back(sub("++", i));
      list.push_back(sub("+", i));
      if (i > 1) list.push_back(sub("v", i));
    }
    b.prefer(Cm, list);
  }
  for (const auto& g : gadgets) {
    b.edge(Cm, g.D1);
    b.edge(Cm, g.X1);
    if (g.X2) b.edge(Cm, *g.X2);
    b.edge(Cm, g.Xn);
    b.edge(Cm, g.H);
  }
  Agent prev = Cm;
  for (std::size_t j = m - 1; j >= 1; --j) {
    Agent C = b.agent(sub("C", j), c_name(j));
    std::vector<std::string> list = ell(j + 1);
    list.push_back("t");
    for (std::size_t k = j; k >= 1; --k) {
      append(list, ell(k));
      if (k > 1) list.push_back(c_name(j - k + 1));
    }
    b.prefer(C, list);
    b.edge(prev, C);
    prev = C;
  }
  Agent T = b.agent("T", "t");
  b.prefer(T, ell(1));
  b.edge(prev, T);
  return b.finish(Cm, "t");
}

struct SpiderShape {
  bool tree = false;
  std::size_t high_degree = 0;    // vertices of degree > 2
  std::size_t longest_hair = 0;   // longest leg off the hub once the two longest legs form the spine
};

/// Shape summary for trees with at most one vertex of degree above two.
inline SpiderShape caterpillar_shape(const Instance& inst) {
  SpiderShape s;
  const std::size_t n = inst.agent_count();
  if (inst.edge_count() + 1 != n) return s;
  std::vector<bool> seen(n, false);
  std::vector<Agent> stack{agent_at(0)};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    Agent a = stack.back();
    stack.pop_back();
    for (Agent v : inst.neighbors(a))
      if (!seen[idx(v)]) {
        seen[idx(v)] = true;
        ++count;
        stack.push_back(v);
      }
  }
  s.tree = count == n;
  std::optional<Agent> hub;
  for (std::size_t a = 0; a < n; ++a)
    if (inst.neighbors(agent_at(a)).size() > 2) {
      ++s.high_degree;
      hub = agent_at(a);
    }
  if (!s.tree || s.high_degree != 1) return s;
  std::vector<std::size_t> legs;
  for (Agent first : inst.neighbors(*hub)) {
    std::size_t len = 1;
    Agent prev = *hub, cur = first;
    for (;;) {
      std::optional<Agent> next;
      for (Agent v : inst.neighbors(cur))
        if (v != prev) next = v;
      if (!next) break;
      prev = cur;
      cur = *next;
      ++len;
    }
    legs.push_back(len);
  }
  std::sort(legs.rbegin(), legs.rend());
  s.longest_hair = legs.size() > 2 ? legs[2] : 0;
  return s;
}

enum class GraphKind { path, cycle, clique, random };

inline GraphKind parse_graph_kind(const std::string& s) {
  if (s == "path") return GraphKind::path;
  if (s == "cycle") return GraphKind::cycle;
  if (s == "clique") return GraphKind::clique;
  if (s == "random") return GraphKind::random;
  throw InputError("unknown graph kind '" + s + "' (path|cycle|clique|random)");
}

/// Seeded random instance. Agent k holds o<k>. Each list has at most
/// max_len - 1 entries above the initial object, mostly objects initially
/// held by neighbors; the target always lists x. With max_len 1 the target
/// still gets x above her own object.
inline Instance gen_random(GraphKind kind, std::size_t n, std::uint64_t seed, std::size_t max_len) {
  if (n < 2) throw InputError("random instances need at least two agents");
  if (max_len < 1) throw InputError("list length bound must be at least one");
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };

  InstanceSpec spec;
  for (std::size_t k = 0; k < n; ++k) {
    spec.objects.push_back("o" + std::to_string(k + 1));
    spec.initial.push_back(object_at(k));
  }
  std::vector<std::vector<std::size_t>> adj(n);
  auto add_edge = [&](std::size_t u, std::size_t v) {
    spec.edges.emplace_back(agent_at(u), agent_at(v));
    adj[u].push_back(v);
    adj[v].push_back(u);
  };
  switch (kind) {
    case GraphKind::path:
      for (std::size_t k = 0; k + 1 < n; ++k) add_edge(k, k + 1);
      break;
    case GraphKind::cycle:
      for (std::size_t k = 0; k + 1 < n; ++k) add_edge(k, k + 1);
      if (n > 2) add_edge(n - 1, 0);
      break;
    case GraphKind::clique:
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) add_edge(u, v);
      break;
    case GraphKind::random: {
      // random spanning tree plus about n/2 extra edges
      std::set<std::pair<std::size_t, std::size_t>> seen;
      for (std::size_t v = 1; v < n; ++v) {
        std::size_t u = uniform(0, v - 1);
        seen.emplace(u, v);
        add_edge(u, v);
      }
      for (std::size_t k = 0; k < n / 2; ++k) {
        std::size_t u = uniform(0, n - 1), v = uniform(0, n - 1);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (seen.emplace(u, v).second) add_edge(u, v);
      }
      break;
    }
  }
  const std::size_t target = uniform(0, n - 1);
  std::size_t x = uniform(0, n - 2);
  if (x >= target) ++x;
  spec.prefs.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    auto& list = spec.prefs[a];
    std::size_t len = uniform(0, std::min(max_len - 1, n - 1));
    for (std::size_t tries = 0; list.size() < len && tries < 8 * max_len; ++tries) {
      std::size_t o;
      if (!adj[a].empty() && uniform(0, 3) != 0) o = adj[a][uniform(0, adj[a].size() - 1)];
      else o = uniform(0, n - 1);
      if (o == a || std::find(list.begin(), list.end(), object_at(o)) != list.end()) continue;
      list.push_back(object_at(o));
    }
    if (a == target && std::find(list.begin(), list.end(), object_at(x)) == list.end()) {
      if (!list.empty() && list.size() + 1 >= max_len) list.pop_back();
      list.insert(list.begin() + static_cast<long>(uniform(0, list.size())), object_at(x));
    }
    list.push_back(object_at(a));
  }
  spec.target_agent = agent_at(target);
  spec.target_object = object_at(x);
  return Instance::create(std::move(spec));
}

struct PlantOptions {
  bool noise = true;        // extra objects inserted into some lists
  bool perturb = true;      // occasionally break one planted trade
  bool outside = true;      // agents beyond the holder of x, random orientation
  std::optional<std::size_t> target;  // position of the target agent, random if unset
};

/// Path instance built around a planted sequence of swaps. Without
/// perturbation the answer is yes.
inline Instance gen_planted_path(std::size_t n, std::uint64_t seed, PlantOptions opt = {}) {
  if (n < 2) throw InputError("planted paths need at least two agents");
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };

  const std::size_t I = opt.target ? std::min(*opt.target, n - 2) : uniform(0, n - 2);
  const std::size_t pz = uniform(0, I);
  const std::size_t K = n - 1 - I;
  std::vector<std::size_t> region;
  for (std::size_t k = pz + 1; k + 1 < n; ++k) region.push_back(k);
  std::shuffle(region.begin(), region.end(), rng);
  std::vector<bool> right(n, false);
  right[pz] = true;
  for (std::size_t k = 0; k + 1 < K; ++k) right[region[k]] = true;

  std::vector<std::size_t> held(n);
  std::vector<std::vector<std::size_t>> history(n);
  for (std::size_t k = 0; k < n; ++k) {
    held[k] = k;
    history[k].push_back(k);
  }
  for (std::size_t k = pz; k + 1 < n;) {
    if (right[held[k]] && !right[held[k + 1]]) {
      std::swap(held[k], held[k + 1]);
      history[k].push_back(held[k]);
      history[k + 1].push_back(held[k + 1]);
      k = k > pz ? k - 1 : pz;
    } else {
      ++k;
    }
  }

  std::size_t extra = opt.outside ? uniform(0, 2) : 0;
  const std::size_t total = n + extra;
  std::vector<std::vector<std::size_t>> lists(total);
  for (std::size_t k = 0; k < n; ++k) lists[k].assign(history[k].rbegin(), history[k].rend());
  for (std::size_t k = n; k < total; ++k) {
    lists[k].push_back(k);
    if (uniform(0, 1)) lists[k].insert(lists[k].begin(), k - 1);
  }
  auto contains = [](const std::vector<std::size_t>& v, std::size_t o) { return std::find(v.begin(), v.end(), o) != v.end(); };
  if (opt.noise) {
    for (std::size_t k = 0; k < total; ++k) {
      if (uniform(0, 2) != 0) continue;
      std::size_t o = uniform(0, total - 1);
      if (contains(lists[k], o)) continue;
      lists[k].insert(lists[k].begin() + static_cast<long>(uniform(0, lists[k].size() - 1)), o);
    }
  }
  if (opt.perturb && uniform(0, 3) == 0) {
    std::size_t k = uniform(0, n - 1);
    if (lists[k].size() >= 3) {
      std::size_t q = uniform(0, lists[k].size() - 3);
      std::swap(lists[k][q], lists[k][q + 1]);
    }
  }

  std::vector<std::size_t> order(total);
  for (std::size_t k = 0; k < total; ++k) order[k] = k;
  if (opt.outside && uniform(0, 1)) std::reverse(order.begin(), order.end());
  std::vector<std::size_t> rename(total);
  for (std::size_t k = 0; k < total; ++k) rename[order[k]] = k;

  InstanceSpec spec;
  spec.prefs.resize(total);
  for (std::size_t k = 0; k < total; ++k) {
    spec.objects.push_back("o" + std::to_string(k + 1));
    spec.initial.push_back(object_at(k));
    for (std::size_t o : lists[order[k]]) spec.prefs[k].push_back(object_at(rename[o]));
  }
  for (std::size_t k = 0; k + 1 < total; ++k) spec.edges.emplace_back(agent_at(k), agent_at(k + 1));
  spec.target_agent = agent_at(rename[I]);
  spec.target_object = object_at(rename[n - 1]);
  return Instance::create(std::move(spec));
}

/// Random connected graph with lists of length at most three where x can
/// travel from its holder to the target along a hidden backbone path. About
/// n/2 chords are added; `noise` gives off-backbone agents a random short list.
inline Instance gen_planted_len3(std::size_t n, std::uint64_t seed, bool noise = true) {
  if (n < 2) throw InputError("planted instances need at least two agents");
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < n; ++k) order[k] = k;
  std::shuffle(order.begin(), order.end(), rng);

  InstanceSpec spec;
  for (std::size_t k = 0; k < n; ++k) {
    spec.objects.push_back("o" + std::to_string(k + 1));
    spec.initial.push_back(object_at(k));
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  auto add_edge = [&](std::size_t u, std::size_t v) {
    if (u == v) return;
    if (u > v) std::swap(u, v);
    if (seen.emplace(u, v).second) spec.edges.emplace_back(agent_at(u), agent_at(v));
  };
  for (std::size_t k = 0; k + 1 < n; ++k) add_edge(order[k], order[k + 1]);
  for (std::size_t k = 0; k < n / 2; ++k) add_edge(uniform(0, n - 1), uniform(0, n - 1));

  // x starts at order[len] and walks back to the target order[0]
  const std::size_t len = uniform(1, n - 1);
  const std::size_t x = order[len];
  spec.prefs.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t a = order[k];
    auto& list = spec.prefs[a];
    if (k == 0) {
      list = {object_at(x)};
    } else if (k < len) {
      list = {object_at(order[k - 1]), object_at(x)};
    } else if (k == len) {
      list = {object_at(order[k - 1])};
    } else if (noise && uniform(0, 1)) {
      list = {object_at(order[k - 1])};
    }
    list.push_back(object_at(a));
  }
  spec.target_agent = agent_at(order[0]);
  spec.target_object = object_at(x);
  return Instance::create(std::move(spec));
}

/// Instances used by `bench`: planted paths with the target a quarter of the
/// way along ("path"), or planted backbones with lists of at most three ("len3").
inline Instance bench_instance(const std::string& kind, std::size_t n, std::uint64_t seed) {
  if (kind == "path") return gen_planted_path(n, seed, PlantOptions{true, false, false, n / 4});
  if (kind == "len3") return gen_planted_len3(n, seed);
  throw InputError("unknown bench kind '" + kind + "' (path|len3)");
}

}  // namespace swapreach
