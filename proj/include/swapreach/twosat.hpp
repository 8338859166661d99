#pragma once

// 2-SAT by strongly connected components of the implication graph.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swapreach/core.hpp"

namespace swapreach {

struct Literal {
  std::size_t var = 0;
  bool positive = true;

  Literal operator!() const { return {var, !positive}; }
  bool operator==(const Literal&) const = default;
  std::size_t node() const { return 2 * var + (positive ? 0 : 1); }
};

inline Literal pos(std::size_t v) { return {v, true}; }
inline Literal neg(std::size_t v) { return {v, false}; }

class TwoSatFormula {
 public:
  TwoSatFormula() = default;
  explicit TwoSatFormula(std::size_t variables) : variables_(variables) {}

  std::size_t add_variable() { return variables_++; }
  std::size_t variable_count() const { return variables_; }

  void add_clause(Literal a, Literal b) {
    if (a.var >= variables_ || b.var >= variables_)
      throw InputError("literal references variable " + std::to_string(std::max(a.var, b.var) + 1) + " of " +
                       std::to_string(variables_));
    clauses_.emplace_back(a, b);
  }
  void add_unit(Literal a) { add_clause(a, a); }

  const std::vector<std::pair<Literal, Literal>>& clauses() const { return clauses_; }

  bool satisfied_by(const std::vector<bool>& model) const {
    if (model.size() != variables_) return false;
    for (auto [a, b] : clauses_)
      if (model[a.var] != a.positive && model[b.var] != b.positive) return false;
    return true;
  }

 private:
  std::size_t variables_ = 0;
  std::vector<std::pair<Literal, Literal>> clauses_;
};

/// A satisfying model, or nullopt when the formula is unsatisfiable.
inline std::optional<std::vector<bool>> solve_2sat(const TwoSatFormula& f) {
  const std::size_t nodes = 2 * f.variable_count();
  std::vector<std::size_t> head(nodes + 1, 0);
  for (auto [a, b] : f.clauses()) {
    ++head[(!a).node() + 1];
    ++head[(!b).node() + 1];
  }
  for (std::size_t k = 0; k < nodes; ++k) head[k + 1] += head[k];
  std::vector<std::size_t> adj(head[nodes]);
  {
    std::vector<std::size_t> fill(head.begin(), head.end() - 1);
    for (auto [a, b] : f.clauses()) {
      adj[fill[(!a).node()]++] = b.node();
      adj[fill[(!b).node()]++] = a.node();
    }
  }

  // Tarjan, iterative. Components are numbered in reverse topological order.
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(nodes, unvisited), low(nodes, 0), comp(nodes, unvisited);
  std::vector<std::size_t> stack, call, edge_pos;
  std::vector<bool> on_stack(nodes, false);
  std::size_t counter = 0, components = 0;
  for (std::size_t root = 0; root < nodes; ++root) {
    if (index[root] != unvisited) continue;
    call.push_back(root);
    edge_pos.push_back(head[root]);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      std::size_t v = call.back();
      std::size_t& e = edge_pos.back();
      if (e < head[v + 1]) {
        std::size_t w = adj[e++];
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back(w);
          edge_pos.push_back(head[w]);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = components;
        } while (w != v);
        ++components;
      }
      call.pop_back();
      edge_pos.pop_back();
      if (!call.empty()) low[call.back()] = std::min(low[call.back()], low[v]);
    }
  }

  std::vector<bool> model(f.variable_count());
  for (std::size_t v = 0; v < f.variable_count(); ++v) {
    std::size_t t = comp[pos(v).node()];
    std::size_t fl = comp[neg(v).node()];
    if (t == fl) return std::nullopt;
    model[v] = t < fl;
  }
  if (!f.satisfied_by(model)) throw InternalError("2-SAT model fails its own clauses");
  return model;
}

}  // namespace swapreach
