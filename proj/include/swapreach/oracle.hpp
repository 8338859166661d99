#pragma once

// Exhaustive breadth-first search over reachable assignments. Exact within
// its state budget; reports "unknown" instead of guessing when it runs out.

#include <cstdlib>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "swapreach/core.hpp"

namespace swapreach {

inline constexpr std::uint64_t kDefaultMaxStates = 5'000'000;

/// SWAPREACH_MAX_STATES when set to a positive integer, else 5e6.
inline std::uint64_t default_max_states() {
  if (const char* env = std::getenv("SWAPREACH_MAX_STATES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultMaxStates;
}

struct OracleOptions {
  std::uint64_t max_states = default_max_states();
};

namespace detail {

// Assignments stored back to back as object indices; an open-addressing
// table maps each stored assignment to its slot.
class StatePool {
 public:
  explicit StatePool(std::size_t width) : width_(width), table_(1024, 0) {}

  std::size_t size() const { return parent_.size(); }
  const char16_t* state(std::size_t k) const { return data_.data() + k * width_; }

  // Returns the index of a new state, or npos when it was already stored.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t insert(const char16_t* s, std::uint32_t parent, Swap via) {
    if ((size() + 1) * 2 > table_.size()) grow();
    std::size_t mask = table_.size() - 1;
    std::size_t h = hash(s) & mask;
    while (table_[h] != 0) {
      if (equal(state(table_[h] - 1), s)) return npos;
      h = (h + 1) & mask;
    }
    data_.insert(data_.end(), s, s + width_);
    parent_.push_back(parent);
    via_.push_back(via);
    table_[h] = static_cast<std::uint32_t>(size());
    return size() - 1;
  }

  SwapSequence path_to(std::size_t k) const {
    SwapSequence seq;
    while (k != 0) {
      seq.push_back(via_[k]);
      k = parent_[k];
    }
    std::reverse(seq.begin(), seq.end());
    return seq;
  }

 private:
  std::size_t hash(const char16_t* s) const { return std::hash<std::u16string_view>{}({s, width_}); }
  bool equal(const char16_t* a, const char16_t* b) const { return std::equal(a, a + width_, b); }

  void grow() {
    std::vector<std::uint32_t> next(table_.size() * 2, 0);
    std::size_t mask = next.size() - 1;
    for (std::size_t k = 0; k < size(); ++k) {
      std::size_t h = hash(state(k)) & mask;
      while (next[h] != 0) h = (h + 1) & mask;
      next[h] = static_cast<std::uint32_t>(k + 1);
    }
    table_.swap(next);
  }

  std::size_t width_;
  std::vector<char16_t> data_;
  std::vector<std::uint32_t> parent_;
  std::vector<Swap> via_;
  std::vector<std::uint32_t> table_;
};

enum class SearchEnd { found, exhausted, budget };

struct SearchResult {
  SearchEnd end = SearchEnd::exhausted;
  std::size_t found_state = 0;
};

// Breadth-first expansion; `goal` is consulted on every stored state.
template <class Goal>
SearchResult bfs(const Instance& inst, StatePool& pool, std::uint64_t limit, Counters& counters, Goal goal) {
  const std::size_t n = inst.agent_count();
  if (n > 65535) throw CapabilityError("oracle supports at most 65535 agents");
  RankTable ranks(inst);
  std::vector<char16_t> cur(n);
  std::vector<std::size_t> where(n);
  for (std::size_t a = 0; a < n; ++a) cur[a] = static_cast<char16_t>(idx(inst.initial(agent_at(a))));
  pool.insert(cur.data(), 0, Swap{});
  ++counters.states;
  if (goal(cur.data())) return {SearchEnd::found, 0};

  for (std::size_t k = 0; k < pool.size(); ++k) {
    std::copy(pool.state(k), pool.state(k) + n, cur.begin());
    for (std::size_t a = 0; a < n; ++a) where[cur[a]] = a;
    for (std::size_t u = 0; u < n; ++u) {
      Agent au = agent_at(u);
      Object held = object_at(cur[u]);
      int r = ranks.rank(au, held);
      auto list = inst.prefs(au);
      for (int q = 0; q < r; ++q) {
        Object want = list[static_cast<std::size_t>(q)];
        std::size_t v = where[idx(want)];
        ++counters.pair_checks;
        if (v <= u) continue;
        Agent av = agent_at(v);
        if (!ranks.prefers(av, held, want) || !inst.adjacent(au, av)) continue;
        std::swap(cur[u], cur[v]);
        std::size_t id = pool.insert(cur.data(), static_cast<std::uint32_t>(k), Swap{au, av});
        if (id != StatePool::npos) {
          ++counters.states;
          if (goal(cur.data())) return {SearchEnd::found, id};
          if (pool.size() > limit) return {SearchEnd::budget, 0};
        }
        std::swap(cur[u], cur[v]);
      }
    }
  }
  return {SearchEnd::exhausted, 0};
}

}  // namespace detail

struct ReachableSet {
  bool complete = false;  // false when the budget ran out first
  std::vector<Assignment> assignments;
};

inline ReachableSet reachable_set(const Instance& inst, std::uint64_t limit) {
  if (limit == 0) throw InputError("state budget must be positive");
  const std::size_t n = inst.agent_count();
  detail::StatePool pool(n);
  Counters counters;
  auto res = detail::bfs(inst, pool, limit, counters, [](const char16_t*) { return false; });
  ReachableSet out;
  out.complete = res.end == detail::SearchEnd::exhausted;
  out.assignments.reserve(pool.size());
  for (std::size_t k = 0; k < pool.size(); ++k) {
    std::vector<Object> held(n);
    for (std::size_t a = 0; a < n; ++a) held[a] = object_at(pool.state(k)[a]);
    out.assignments.emplace_back(std::move(held));
  }
  return out;
}

/// Yes with a shortest certificate, no when the reachable set is exhausted,
/// unknown when the budget runs out.
inline Decision oracle_decide(const Instance& inst, const OracleOptions& options = {}) {
  if (options.max_states == 0) throw InputError("state budget must be positive");
  Decision d;
  d.algorithm = "oracle";
  const std::size_t t = idx(inst.target_agent());
  const auto x = static_cast<char16_t>(idx(inst.target_object()));
  if (!inst.prefers(inst.target_agent(), inst.target_object(), inst.initial(inst.target_agent()))) {
    d.verdict = inst.initial(inst.target_agent()) == inst.target_object() ? Verdict::yes : Verdict::no;
    return d;
  }
  detail::StatePool pool(inst.agent_count());
  auto res = detail::bfs(inst, pool, options.max_states, d.counters, [&](const char16_t* s) { return s[t] == x; });
  switch (res.end) {
    case detail::SearchEnd::found:
      d.verdict = Verdict::yes;
      d.certificate = pool.path_to(res.found_state);
      break;
    case detail::SearchEnd::exhausted: d.verdict = Verdict::no; break;
    case detail::SearchEnd::budget: d.verdict = Verdict::unknown; break;
  }
  return d;
}

}  // namespace swapreach
