#pragma once

// Preference lists of length at most three: reachability in the carrier
// digraphs D, D1, D2, D3 built over the canonical instance (target agent 0,
// holder of x last, agent i initially holding object i).

#include <deque>
#include <optional>
#include <vector>

#include "swapreach/canonical.hpp"
#include "swapreach/core.hpp"

namespace swapreach {

class Digraph {
 public:
  explicit Digraph(std::size_t vertices = 0) : out_(vertices), in_degree_(vertices, 0), deleted_(vertices, false) {}

  std::size_t vertex_count() const { return out_.size(); }

  void add_arc(Agent u, Agent v) {
    if (deleted_[idx(u)] || deleted_[idx(v)]) return;
    auto& o = out_[idx(u)];
    if (std::find(o.begin(), o.end(), v) != o.end()) return;
    o.push_back(v);
    ++in_degree_[idx(v)];
  }

  /// Copy with the given vertices and their arcs removed.
  Digraph without(const std::vector<Agent>& removed) const {
    Digraph d(vertex_count());
    d.deleted_ = deleted_;
    for (Agent v : removed) d.deleted_[idx(v)] = true;
    for (std::size_t u = 0; u < out_.size(); ++u)
      for (Agent v : out_[u]) d.add_arc(agent_at(u), v);
    return d;
  }

  bool deleted(Agent v) const { return deleted_[idx(v)]; }
  bool has_arc(Agent u, Agent v) const {
    const auto& o = out_[idx(u)];
    return std::find(o.begin(), o.end(), v) != o.end();
  }
  const std::vector<Agent>& out(Agent v) const { return out_[idx(v)]; }
  std::size_t out_degree(Agent v) const { return out_[idx(v)].size(); }
  std::size_t in_degree(Agent v) const { return in_degree_[idx(v)]; }

  std::vector<std::pair<Agent, Agent>> arcs() const {
    std::vector<std::pair<Agent, Agent>> all;
    for (std::size_t u = 0; u < out_.size(); ++u)
      for (Agent v : out_[u]) all.emplace_back(agent_at(u), v);
    std::sort(all.begin(), all.end());
    return all;
  }
  std::size_t arc_count() const {
    std::size_t c = 0;
    for (const auto& o : out_) c += o.size();
    return c;
  }

 private:
  std::vector<std::vector<Agent>> out_;
  std::vector<std::size_t> in_degree_;
  std::vector<bool> deleted_;
};

inline void require_len3(const Instance& inst) {
  for (std::size_t a = 0; a < inst.agent_count(); ++a)
    if (inst.prefs(agent_at(a)).size() > 3)
      throw CapabilityError("agent " + std::to_string(a + 1) +
                            " has a preference list longer than three; use --algo oracle (or path on paths)");
}

namespace detail {

// Arc (i,j) when j would hand her initial object to i in exchange for `carried`.
inline Digraph carrier_digraph(const Instance& inst, Object carried, Counters* counters) {
  Digraph d(inst.agent_count());
  for (auto [i, j] : inst.edges()) {
    if (counters) ++counters->edge_scans;
    Object oi = inst.initial(i), oj = inst.initial(j);
    if (inst.prefers(i, oj, carried) && inst.prefers(j, carried, oj)) d.add_arc(i, j);
    if (inst.prefers(j, oi, carried) && inst.prefers(i, carried, oi)) d.add_arc(j, i);
  }
  return d;
}

inline Agent holder_of_x(const Instance& inst) { return inst.initial_holder(inst.target_object()); }

}  // namespace detail

/// Carrier digraph for x. Expects the canonical len3 form.
inline Digraph build_D(const Instance& inst, Counters* counters = nullptr) {
  require_len3(inst);
  return detail::carrier_digraph(inst, inst.target_object(), counters);
}

/// Carrier digraph for the initial object of agent w.
inline Digraph build_D1(const Instance& inst, Agent w, Counters* counters = nullptr) {
  require_len3(inst);
  return detail::carrier_digraph(inst, inst.initial(w), counters);
}

namespace detail {

inline Digraph d_minus_plus(const Instance& inst, const Digraph& D, Agent w, const std::vector<Agent>& removed,
                            Counters* counters) {
  Digraph d = D.without(removed);
  Agent target = inst.target_agent();
  Object ow = inst.initial(w);
  Object x = inst.target_object();
  for (Agent j : inst.neighbors(target)) {
    if (counters) ++counters->edge_scans;
    if (inst.prefers(j, ow, x)) d.add_arc(j, target);
  }
  return d;
}

}  // namespace detail

/// D minus the interior of a D1-path plus arcs (j, target) for neighbors j
/// of the target that prefer w's object over x.
inline Digraph build_D2(const Instance& inst, const Digraph& D, Agent w, const std::vector<Agent>& path_interior,
                        Counters* counters = nullptr) {
  return detail::d_minus_plus(inst, D, w, path_interior, counters);
}

/// As build_D2, additionally deleting w.
inline Digraph build_D3(const Instance& inst, const Digraph& D, Agent w, const std::vector<Agent>& path_interior,
                        Counters* counters = nullptr) {
  std::vector<Agent> removed = path_interior;
  removed.push_back(w);
  return detail::d_minus_plus(inst, D, w, removed, counters);
}

struct FirstArc {
  enum class Kind { any, required, forbidden };
  Kind kind = Kind::any;
  std::pair<Agent, Agent> arc{};

  static FirstArc any() { return {}; }
  static FirstArc required(Agent u, Agent v) { return {Kind::required, {u, v}}; }
  static FirstArc forbidden(Agent u, Agent v) { return {Kind::forbidden, {u, v}}; }
};

/// Shortest simple directed path honoring the first-arc constraint.
inline std::optional<std::vector<Agent>> constrained_path(const Digraph& D, Agent from, Agent to,
                                                          FirstArc first = FirstArc::any(),
                                                          Counters* counters = nullptr) {
  if (from == to) return std::vector<Agent>{from};
  if (D.deleted(from) || D.deleted(to)) return std::nullopt;
  const std::size_t n = D.vertex_count();
  constexpr int unseen = -2;
  std::vector<int> parent(n, unseen);
  parent[idx(from)] = -1;
  std::deque<Agent> queue;
  for (Agent v : D.out(from)) {
    if (counters) ++counters->arc_visits;
    bool is_arc = (std::make_pair(from, v) == first.arc);
    if (first.kind == FirstArc::Kind::required && !is_arc) continue;
    if (first.kind == FirstArc::Kind::forbidden && is_arc) continue;
    if (parent[idx(v)] != unseen) continue;
    parent[idx(v)] = static_cast<int>(idx(from));
    queue.push_back(v);
  }
  while (!queue.empty() && parent[idx(to)] == unseen) {
    Agent u = queue.front();
    queue.pop_front();
    for (Agent v : D.out(u)) {
      if (counters) ++counters->arc_visits;
      if (parent[idx(v)] != unseen) continue;
      parent[idx(v)] = static_cast<int>(idx(u));
      queue.push_back(v);
    }
  }
  if (parent[idx(to)] == unseen) return std::nullopt;
  std::vector<Agent> path;
  for (int v = static_cast<int>(idx(to)); v != -1; v = parent[static_cast<std::size_t>(v)]) path.push_back(agent_at(static_cast<std::size_t>(v)));
  std::reverse(path.begin(), path.end());
  return path;
}

namespace detail {

inline void check_carrier_degrees(const Digraph& D, Agent source) {
  for (std::size_t v = 0; v < D.vertex_count(); ++v) {
    Agent a = agent_at(v);
    if (D.out_degree(a) > (a == source ? 2u : 1u))
      throw InternalError("carrier digraph out-degree bound violated at agent " + std::to_string(v + 1));
  }
  if (D.in_degree(source) != 0) throw InternalError("carrier digraph has an arc into its source");
}

inline void append_path_swaps(SwapSequence& seq, const std::vector<Agent>& path, std::size_t skip_first = 0) {
  for (std::size_t k = skip_first; k + 1 < path.size(); ++k) seq.push_back({path[k], path[k + 1]});
}

// Simple paths from `from` that end at `to`; every vertex other than `from`
// has at most one out-arc, so each first arc determines its path.
inline std::vector<std::vector<Agent>> walks_to(const Digraph& D, Agent from, Agent to, Counters* counters) {
  std::vector<std::vector<Agent>> found;
  std::vector<bool> on_path(D.vertex_count(), false);
  for (Agent first : D.out(from)) {
    std::vector<Agent> path{from, first};
    std::fill(on_path.begin(), on_path.end(), false);
    on_path[idx(from)] = on_path[idx(first)] = true;
    Agent cur = first;
    while (cur != to) {
      if (counters) ++counters->arc_visits;
      const auto& o = D.out(cur);
      if (o.empty()) break;
      if (o.size() > 1) throw InternalError("carrier digraph branches below its source");
      cur = o.front();
      if (on_path[idx(cur)]) break;
      on_path[idx(cur)] = true;
      path.push_back(cur);
    }
    if (cur == to) found.push_back(std::move(path));
  }
  return found;
}

inline Decision len3_yes(const Canonical& c, const Instance& original, const SwapSequence& canonical_seq,
                         Counters counters) {
  Decision d;
  d.algorithm = "len3";
  d.verdict = Verdict::yes;
  d.counters = counters;
  d.certificate = c.to_original(canonical_seq);
  auto check = verify_certificate(original, d.certificate);
  if (!check) throw InternalError("len3 certificate failed verification: " + check.message);
  return d;
}

}  // namespace detail

/// Decides instances whose effective lists have length at most three.
inline Decision solve_len3(const Instance& inst) {
  Decision d;
  d.algorithm = "len3";
  if (auto t = trivial_decision(inst)) {
    d.verdict = *t ? Verdict::yes : Verdict::no;
    return d;
  }
  Canonical c = canonicalize(inst);
  const Instance& ci = c.instance;
  require_len3(ci);
  Counters counters;
  const Agent T = ci.target_agent();
  const Agent N = detail::holder_of_x(ci);

  Digraph D = build_D(ci, &counters);
  detail::check_carrier_degrees(D, N);
  if (auto P = constrained_path(D, N, T, FirstArc::any(), &counters)) {
    SwapSequence seq;
    detail::append_path_swaps(seq, *P);
    return detail::len3_yes(c, inst, seq, counters);
  }

  auto tl = ci.prefs(T);
  if (tl.size() == 3 && tl[0] == ci.target_object()) {
    Agent W = ci.initial_holder(tl[1]);
    Digraph D1 = build_D1(ci, W, &counters);
    detail::check_carrier_degrees(D1, W);
    for (const auto& P1 : detail::walks_to(D1, W, T, &counters)) {
      std::vector<Agent> interior;
      SwapSequence seq;
      detail::append_path_swaps(seq, P1);
      if (P1[1] == N) {
        interior.assign(P1.begin() + 2, P1.end() - 1);
        Digraph D2 = build_D2(ci, D, W, interior, &counters);
        if (auto P2 = constrained_path(D2, N, T, FirstArc::required(N, W), &counters)) {
          detail::append_path_swaps(seq, *P2, 1);
          return detail::len3_yes(c, inst, seq, counters);
        }
      } else {
        interior.assign(P1.begin() + 1, P1.end() - 1);
        Digraph D3 = build_D3(ci, D, W, interior, &counters);
        if (auto P3 = constrained_path(D3, N, T, FirstArc::forbidden(N, W), &counters)) {
          detail::append_path_swaps(seq, *P3);
          return detail::len3_yes(c, inst, seq, counters);
        }
      }
    }
  }
  d.verdict = Verdict::no;
  d.counters = counters;
  return d;
}

}  // namespace swapreach
