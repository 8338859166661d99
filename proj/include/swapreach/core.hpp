#pragma once

// Data model for Reachable Object instances: agents holding one object each,
// strict partial preference lists, an undirected social network, and the
// swap relation between adjacent agents.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace swapreach {

enum class Agent : std::int32_t {};
enum class Object : std::int32_t {};

constexpr std::size_t idx(Agent a) { return static_cast<std::size_t>(a); }
constexpr std::size_t idx(Object o) { return static_cast<std::size_t>(o); }
constexpr Agent agent_at(std::size_t i) { return Agent{static_cast<std::int32_t>(i)}; }
constexpr Object object_at(std::size_t i) { return Object{static_cast<std::int32_t>(i)}; }

/// Malformed or inconsistent user input (files, CLI values, formulas).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested algorithm cannot handle this instance class.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A broken internal invariant. Never caused by user input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Swap {
  Agent first;
  Agent second;
  bool operator==(const Swap&) const = default;
};

using SwapSequence = std::vector<Swap>;

/// Plain description of an instance; validated by Instance::create.
struct InstanceSpec {
  std::vector<std::string> objects;
  std::vector<std::vector<Object>> prefs;  // most preferred first
  std::vector<std::pair<Agent, Agent>> edges;
  std::vector<Object> initial;  // agent -> object
  Agent target_agent{0};
  Object target_object{0};
  std::vector<std::string> agent_names;  // optional, empty or one per agent
};

class Instance {
 public:
  static Instance create(InstanceSpec spec) {
    Instance inst;
    inst.validate_and_index(std::move(spec));
    return inst;
  }

  std::size_t agent_count() const { return spec_.initial.size(); }
  std::size_t object_count() const { return spec_.objects.size(); }
  std::size_t edge_count() const { return spec_.edges.size(); }

  const std::string& object_name(Object o) const { return spec_.objects.at(idx(o)); }
  const std::vector<std::string>& object_names() const { return spec_.objects; }
  std::optional<Object> find_object(const std::string& name) const {
    auto it = object_index_.find(name);
    if (it == object_index_.end()) return std::nullopt;
    return it->second;
  }

  bool has_agent_names() const { return !spec_.agent_names.empty(); }
  std::string agent_name(Agent a) const {
    if (has_agent_names()) return spec_.agent_names.at(idx(a));
    return std::to_string(idx(a) + 1);
  }
  const std::vector<std::string>& agent_names() const { return spec_.agent_names; }

  std::span<const Object> prefs(Agent a) const { return spec_.prefs.at(idx(a)); }

  /// 0 for the most preferred object, -1 when the object is not listed.
  int rank(Agent a, Object o) const {
    const auto& r = ranks_[idx(a)];
    auto it = std::lower_bound(r.begin(), r.end(), std::make_pair(o, 0),
                               [](const auto& x, const auto& y) { return x.first < y.first; });
    if (it == r.end() || it->first != o) return -1;
    return it->second;
  }

  /// Strict preference; false whenever one of the objects is unlisted.
  bool prefers(Agent a, Object better, Object worse) const {
    int rb = rank(a, better);
    int rw = rank(a, worse);
    return rb >= 0 && rw >= 0 && rb < rw;
  }

  bool adjacent(Agent u, Agent v) const {
    const auto& nb = adjacency_.at(idx(u));
    return std::binary_search(nb.begin(), nb.end(), v);
  }
  std::span<const Agent> neighbors(Agent a) const { return adjacency_.at(idx(a)); }
  const std::vector<std::pair<Agent, Agent>>& edges() const { return spec_.edges; }

  std::span<const Object> initial() const { return spec_.initial; }
  Object initial(Agent a) const { return spec_.initial.at(idx(a)); }
  Agent initial_holder(Object o) const { return holder_.at(idx(o)); }

  Agent target_agent() const { return spec_.target_agent; }
  Object target_object() const { return spec_.target_object; }

  std::size_t max_list_length() const {
    std::size_t best = 0;
    for (const auto& p : spec_.prefs) best = std::max(best, p.size());
    return best;
  }

  bool contains_agent(Agent a) const {
    return static_cast<std::int32_t>(a) >= 0 && idx(a) < agent_count();
  }

  const InstanceSpec& spec() const { return spec_; }

  bool operator==(const Instance& other) const {
    const auto& a = spec_;
    const auto& b = other.spec_;
    return a.objects == b.objects && a.prefs == b.prefs && a.edges == b.edges &&
           a.initial == b.initial && a.target_agent == b.target_agent &&
           a.target_object == b.target_object && a.agent_names == b.agent_names;
  }

 private:
  Instance() = default;

  void validate_and_index(InstanceSpec spec);

  InstanceSpec spec_;
  std::vector<std::vector<std::pair<Object, int>>> ranks_;
  std::vector<std::vector<Agent>> adjacency_;
  std::vector<Agent> holder_;
  std::unordered_map<std::string, Object> object_index_;
};

inline void Instance::validate_and_index(InstanceSpec spec) {
  const std::size_t n = spec.initial.size();
  if (n == 0) throw InputError("instance must have at least one agent");
  if (spec.objects.size() != n)
    throw InputError("object count " + std::to_string(spec.objects.size()) +
                     " differs from agent count " + std::to_string(n));
  if (spec.prefs.size() != n) throw InputError("one preference list per agent is required");
  if (!spec.agent_names.empty() && spec.agent_names.size() != n)
    throw InputError("agent names must be given for every agent or for none");

  object_index_.clear();
  for (std::size_t o = 0; o < n; ++o) {
    if (spec.objects[o].empty()) throw InputError("empty object identifier");
    if (!object_index_.emplace(spec.objects[o], object_at(o)).second)
      throw InputError("duplicate object identifier '" + spec.objects[o] + "'");
  }

  auto valid_object = [n](Object o) { return static_cast<std::int32_t>(o) >= 0 && idx(o) < n; };
  auto valid_agent = [n](Agent a) { return static_cast<std::int32_t>(a) >= 0 && idx(a) < n; };

  holder_.assign(n, Agent{-1});
  for (std::size_t a = 0; a < n; ++a) {
    Object o = spec.initial[a];
    if (!valid_object(o)) throw InputError("agent " + std::to_string(a + 1) + " holds an unknown object");
    if (holder_[idx(o)] != Agent{-1})
      throw InputError("initial assignment is not a bijection: object '" + spec.objects[idx(o)] +
                       "' is held twice");
    holder_[idx(o)] = agent_at(a);
  }

  ranks_.assign(n, {});
  for (std::size_t a = 0; a < n; ++a) {
    auto& r = ranks_[a];
    r.reserve(spec.prefs[a].size());
    for (std::size_t k = 0; k < spec.prefs[a].size(); ++k) {
      Object o = spec.prefs[a][k];
      if (!valid_object(o)) throw InputError("preference list of agent " + std::to_string(a + 1) + " names an unknown object");
      r.emplace_back(o, static_cast<int>(k));
    }
    std::sort(r.begin(), r.end());
    for (std::size_t k = 1; k < r.size(); ++k)
      if (r[k].first == r[k - 1].first)
        throw InputError("preference list of agent " + std::to_string(a + 1) + " repeats object '" +
                         spec.objects[idx(r[k].first)] + "'");
    bool has_initial = std::binary_search(
        r.begin(), r.end(), std::make_pair(spec.initial[a], 0),
        [](const auto& x, const auto& y) { return x.first < y.first; });
    if (!has_initial)
      throw InputError("agent " + std::to_string(a + 1) + " does not list her initial object '" +
                       spec.objects[idx(spec.initial[a])] + "'");
  }

  for (auto& [u, v] : spec.edges) {
    if (!valid_agent(u) || !valid_agent(v)) throw InputError("edge references an unknown agent");
    if (u == v) throw InputError("self-loop at agent " + std::to_string(idx(u) + 1));
    if (v < u) std::swap(u, v);
  }
  std::sort(spec.edges.begin(), spec.edges.end());
  for (std::size_t k = 1; k < spec.edges.size(); ++k)
    if (spec.edges[k] == spec.edges[k - 1])
      throw InputError("duplicate edge " + std::to_string(idx(spec.edges[k].first) + 1) + "-" +
                       std::to_string(idx(spec.edges[k].second) + 1));
  adjacency_.assign(n, {});
  for (auto [u, v] : spec.edges) {
    adjacency_[idx(u)].push_back(v);
    adjacency_[idx(v)].push_back(u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());

  if (!valid_agent(spec.target_agent)) throw InputError("target agent is unknown");
  if (!valid_object(spec.target_object)) throw InputError("target object is unknown");

  spec_ = std::move(spec);
}

/// Agent -> object bijection.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<Object> held) : held_(std::move(held)) {}
  static Assignment initial_of(const Instance& inst) {
    return Assignment({inst.initial().begin(), inst.initial().end()});
  }

  Object operator[](Agent a) const { return held_.at(idx(a)); }
  std::size_t size() const { return held_.size(); }
  std::span<const Object> held() const { return held_; }

  void exchange(Agent i, Agent j) { std::swap(held_.at(idx(i)), held_.at(idx(j))); }

  bool is_bijection_for(const Instance& inst) const {
    if (held_.size() != inst.agent_count()) return false;
    std::vector<bool> seen(inst.object_count(), false);
    for (Object o : held_) {
      if (static_cast<std::int32_t>(o) < 0 || idx(o) >= seen.size() || seen[idx(o)]) return false;
      seen[idx(o)] = true;
    }
    return true;
  }

  bool operator==(const Assignment&) const = default;

 private:
  std::vector<Object> held_;
};

/// Dense rank lookup for hot loops; falls back to the instance for huge inputs.
class RankTable {
 public:
  static constexpr std::size_t dense_limit = 4096;

  explicit RankTable(const Instance& inst) : inst_(&inst), n_(inst.agent_count()) {
    if (n_ <= dense_limit) {
      dense_.assign(n_ * n_, -1);
      for (std::size_t a = 0; a < n_; ++a) {
        auto list = inst.prefs(agent_at(a));
        for (std::size_t k = 0; k < list.size(); ++k) dense_[a * n_ + idx(list[k])] = static_cast<std::int16_t>(k);
      }
    }
  }

  int rank(Agent a, Object o) const {
    if (!dense_.empty()) return dense_[idx(a) * n_ + idx(o)];
    return inst_->rank(a, o);
  }
  bool prefers(Agent a, Object better, Object worse) const {
    int rb = rank(a, better);
    int rw = rank(a, worse);
    return rb >= 0 && rw >= 0 && rb < rw;
  }

 private:
  const Instance* inst_;
  std::size_t n_;
  std::vector<std::int16_t> dense_;
};

inline void require_agent(const Instance& inst, Agent a) {
  if (!inst.contains_agent(a)) throw InputError("unknown agent " + std::to_string(static_cast<std::int32_t>(a) + 1));
}

/// Adjacent agents that both strictly prefer the other's current object.
inline bool admits_swap(const Instance& inst, const Assignment& a, Agent i, Agent j) {
  require_agent(inst, i);
  require_agent(inst, j);
  if (i == j || !inst.adjacent(i, j)) return false;
  return inst.prefers(i, a[j], a[i]) && inst.prefers(j, a[i], a[j]);
}

inline Assignment apply_swap(const Instance& inst, const Assignment& a, Agent i, Agent j) {
  if (!admits_swap(inst, a, i, j))
    throw std::logic_error("swap " + std::to_string(idx(i) + 1) + "<->" + std::to_string(idx(j) + 1) +
                           " is not admitted");
  Assignment next = a;
  next.exchange(i, j);
  return next;
}

enum class CertificateFailure {
  none,
  unknown_agent,
  self_swap,
  not_adjacent,
  not_rational,
  edge_reused,
  too_long,
  target_not_reached,
};

inline const char* to_string(CertificateFailure f) {
  switch (f) {
    case CertificateFailure::none: return "none";
    case CertificateFailure::unknown_agent: return "unknown-agent";
    case CertificateFailure::self_swap: return "self-swap";
    case CertificateFailure::not_adjacent: return "not-adjacent";
    case CertificateFailure::not_rational: return "not-rational";
    case CertificateFailure::edge_reused: return "edge-reused";
    case CertificateFailure::too_long: return "too-long";
    case CertificateFailure::target_not_reached: return "target-not-reached";
  }
  return "unknown";
}

struct CertificateCheck {
  bool valid = false;
  CertificateFailure failure = CertificateFailure::none;
  std::optional<std::size_t> failed_step;  // 0-based index into the sequence
  std::string message;
  Assignment final_assignment;

  explicit operator bool() const { return valid; }
};

/// Upper bound on certificate length: each object crosses each edge at most once.
inline std::uint64_t certificate_length_limit(const Instance& inst) {
  std::uint64_t n = inst.agent_count();
  return std::max<std::uint64_t>(1, n * n * n);
}

/// Replays `seq` from the initial assignment and checks that it ends with the
/// target agent holding the target object.
inline CertificateCheck verify_certificate(const Instance& inst, const SwapSequence& seq) {
  CertificateCheck out;
  Assignment cur = Assignment::initial_of(inst);
  auto fail = [&](CertificateFailure f, std::optional<std::size_t> step, std::string msg) {
    out.valid = false;
    out.failure = f;
    out.failed_step = step;
    out.message = std::move(msg);
    out.final_assignment = cur;
    return out;
  };
  if (seq.size() > certificate_length_limit(inst))
    return fail(CertificateFailure::too_long, std::nullopt, "sequence exceeds the n^3 length bound");

  const std::uint64_t n = inst.agent_count();
  std::unordered_set<std::uint64_t> passages;
  passages.reserve(seq.size() * 2);
  for (std::size_t k = 0; k < seq.size(); ++k) {
    auto [i, j] = seq[k];
    if (!inst.contains_agent(i) || !inst.contains_agent(j))
      return fail(CertificateFailure::unknown_agent, k, "unknown agent");
    if (i == j) return fail(CertificateFailure::self_swap, k, "agent swaps with herself");
    if (!inst.adjacent(i, j)) return fail(CertificateFailure::not_adjacent, k, "agents are not adjacent");
    if (!inst.prefers(i, cur[j], cur[i]) || !inst.prefers(j, cur[i], cur[j]))
      return fail(CertificateFailure::not_rational, k, "trade is not rational for both agents");
    std::uint64_t lo = std::min(idx(i), idx(j));
    std::uint64_t hi = std::max(idx(i), idx(j));
    for (Object o : {cur[i], cur[j]}) {
      std::uint64_t key = (static_cast<std::uint64_t>(idx(o)) * n + lo) * n + hi;
      if (!passages.insert(key).second)
        return fail(CertificateFailure::edge_reused, k, "object '" + inst.object_name(o) + "' crosses an edge twice");
    }
    cur.exchange(i, j);
  }
  if (cur[inst.target_agent()] != inst.target_object())
    return fail(CertificateFailure::target_not_reached, std::nullopt, "target agent does not end with the target object");
  out.valid = true;
  out.final_assignment = cur;
  return out;
}

enum class Verdict { yes, no, unknown };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

/// Work counters reported by the solvers; platform independent.
struct Counters {
  std::uint64_t edge_scans = 0;
  std::uint64_t arc_visits = 0;
  std::uint64_t swap_edge_steps = 0;
  std::uint64_t pair_checks = 0;
  std::uint64_t states = 0;

  std::uint64_t total() const { return edge_scans + arc_visits + swap_edge_steps + pair_checks + states; }
  Counters& operator+=(const Counters& o) {
    edge_scans += o.edge_scans;
    arc_visits += o.arc_visits;
    swap_edge_steps += o.swap_edge_steps;
    pair_checks += o.pair_checks;
    states += o.states;
    return *this;
  }
};

struct Decision {
  Verdict verdict = Verdict::unknown;
  SwapSequence certificate;
  std::string algorithm;
  Counters counters;
};

/// Yes when the target already holds x, no when she can never accept x.
inline std::optional<bool> trivial_decision(const Instance& inst) {
  Agent t = inst.target_agent();
  Object x = inst.target_object();
  if (inst.initial(t) == x) return true;
  if (!inst.prefers(t, x, inst.initial(t))) return false;
  return std::nullopt;
}

}  // namespace swapreach
