#pragma once

// Relabelings that bring an instance into the shapes the solvers expect.
//
// General form: target agent first, holder of x last, agent i holds object i.
// Path form: agents ordered along the path, x at the last position, target
// to its left; agents on the far side of x are dropped.
//
// Both forms truncate every list below the agent's initial object and the
// target's list above x.

#include <algorithm>
#include <optional>
#include <vector>

#include "swapreach/core.hpp"

namespace swapreach {

struct Canonical {
  Instance instance;
  std::vector<Agent> agent_to_original;    // canonical agent -> original agent
  std::vector<Object> object_to_original;  // canonical object -> original object

  SwapSequence to_original(const SwapSequence& seq) const {
    SwapSequence out;
    out.reserve(seq.size());
    for (auto [i, j] : seq) out.push_back({agent_to_original.at(idx(i)), agent_to_original.at(idx(j))});
    return out;
  }
};

namespace detail {

// Builds the relabeled instance from an ordering of original agents.
inline Canonical relabel(const Instance& inst, const std::vector<Agent>& order) {
  const std::size_t m = order.size();
  std::vector<int> new_agent(inst.agent_count(), -1);
  for (std::size_t k = 0; k < m; ++k) new_agent[idx(order[k])] = static_cast<int>(k);

  std::vector<Object> object_to_original;
  std::vector<int> new_object(inst.object_count(), -1);
  for (std::size_t k = 0; k < m; ++k) {
    Object o = inst.initial(order[k]);
    new_object[idx(o)] = static_cast<int>(k);
    object_to_original.push_back(o);
  }

  const Agent target = inst.target_agent();
  const Object x = inst.target_object();

  InstanceSpec spec;
  for (std::size_t k = 0; k < m; ++k) {
    spec.objects.push_back(inst.object_name(object_to_original[k]));
    spec.initial.push_back(object_at(k));
    if (inst.has_agent_names()) spec.agent_names.push_back(inst.agent_name(order[k]));
  }
  spec.prefs.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    Agent a = order[k];
    Object own = inst.initial(a);
    bool above_x_cut = (a == target && inst.prefers(a, x, own));
    bool seen_x = false;
    for (Object o : inst.prefs(a)) {
      if (above_x_cut && !seen_x && o != x) continue;
      if (o == x) seen_x = true;
      if (new_object[idx(o)] >= 0) spec.prefs[k].push_back(object_at(static_cast<std::size_t>(new_object[idx(o)])));
      if (o == own) break;
    }
  }
  for (auto [u, v] : inst.edges()) {
    int nu = new_agent[idx(u)];
    int nv = new_agent[idx(v)];
    if (nu >= 0 && nv >= 0) spec.edges.emplace_back(agent_at(static_cast<std::size_t>(nu)), agent_at(static_cast<std::size_t>(nv)));
  }
  int nt = new_agent[idx(target)];
  int nx = new_object[idx(x)];
  if (nt < 0 || nx < 0) throw InputError("target object not locatable");
  spec.target_agent = agent_at(static_cast<std::size_t>(nt));
  spec.target_object = object_at(static_cast<std::size_t>(nx));
  return Canonical{Instance::create(std::move(spec)), order, std::move(object_to_original)};
}

}  // namespace detail

/// Target agent becomes agent 0 and the holder of x becomes the last agent.
inline Canonical canonicalize(const Instance& inst) {
  const std::size_t n = inst.agent_count();
  Agent t = inst.target_agent();
  Agent h = inst.initial_holder(inst.target_object());
  std::vector<Agent> order;
  order.push_back(t);
  for (std::size_t a = 0; a < n; ++a)
    if (agent_at(a) != t && agent_at(a) != h) order.push_back(agent_at(a));
  if (h != t) order.push_back(h);
  return detail::relabel(inst, order);
}

/// Agents in path order when the graph is a simple path; a single agent counts.
inline std::optional<std::vector<Agent>> path_order(const Instance& inst) {
  const std::size_t n = inst.agent_count();
  if (inst.edge_count() + 1 != n) return std::nullopt;
  if (n == 1) return std::vector<Agent>{agent_at(0)};
  std::optional<Agent> start;
  for (std::size_t a = 0; a < n; ++a) {
    auto d = inst.neighbors(agent_at(a)).size();
    if (d == 0 || d > 2) return std::nullopt;
    if (d == 1 && !start) start = agent_at(a);
  }
  if (!start) return std::nullopt;
  std::vector<Agent> order{*start};
  std::vector<bool> seen(n, false);
  seen[idx(*start)] = true;
  while (order.size() < n) {
    std::optional<Agent> next;
    for (Agent b : inst.neighbors(order.back()))
      if (!seen[idx(b)]) next = b;
    if (!next) return std::nullopt;
    seen[idx(*next)] = true;
    order.push_back(*next);
  }
  return order;
}

inline bool is_path(const Instance& inst) { return path_order(inst).has_value(); }

inline bool is_cycle(const Instance& inst) {
  const std::size_t n = inst.agent_count();
  if (n < 3 || inst.edge_count() != n) return false;
  for (std::size_t a = 0; a < n; ++a)
    if (inst.neighbors(agent_at(a)).size() != 2) return false;
  std::vector<bool> seen(n, false);
  std::vector<Agent> stack{agent_at(0)};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    Agent a = stack.back();
    stack.pop_back();
    for (Agent b : inst.neighbors(a))
      if (!seen[idx(b)]) {
        seen[idx(b)] = true;
        ++count;
        stack.push_back(b);
      }
  }
  return count == n;
}

inline bool is_clique(const Instance& inst) {
  std::size_t n = inst.agent_count();
  return inst.edge_count() == n * (n - 1) / 2;
}

/// Path form. Requires a path graph and a target that does not already hold x.
inline Canonical canonicalize_path(const Instance& inst) {
  auto order = path_order(inst);
  if (!order) throw CapabilityError("graph is not a path");
  Agent t = inst.target_agent();
  Agent h = inst.initial_holder(inst.target_object());
  if (t == h) throw InputError("target agent already holds the target object");
  auto pos_of = [&](Agent a) {
    return static_cast<std::size_t>(std::find(order->begin(), order->end(), a) - order->begin());
  };
  if (pos_of(t) > pos_of(h)) std::reverse(order->begin(), order->end());
  order->resize(pos_of(h) + 1);
  return detail::relabel(inst, *order);
}

}  // namespace swapreach
