#pragma once

// Reachable Object on paths.
//
// Works on the path form: positions 0..n-1 along the path, agent k initially
// holds object k, x sits at position n-1 and the target I is left of it.
// Objects are named by their initial position throughout.
//
// For a guessed object z (the one I hands over for x) every object strictly
// between z and x either crosses x (moves right) or crosses z (moves left).
// Right-movers are one object per edge index 2..n-1-I; the pipeline below
// narrows each index down to at most two candidates, groups them into
// blocks with at most two selections each and finishes with 2-SAT.

#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "swapreach/canonical.hpp"
#include "swapreach/core.hpp"
#include "swapreach/twosat.hpp"

namespace swapreach {

class PathInstance {
 public:
  explicit PathInstance(Instance canonical)
      : inst_(std::make_shared<const Instance>(std::move(canonical))), ranks_(*inst_) {
    const std::size_t n = inst_->agent_count();
    for (std::size_t k = 0; k < n; ++k)
      if (inst_->initial(agent_at(k)) != object_at(k)) throw InputError("path form requires agent k to hold object k");
    if (inst_->edge_count() + 1 != n) throw InputError("path form requires the edges {k,k+1}");
    for (std::size_t k = 0; k + 1 < n; ++k)
      if (!inst_->adjacent(agent_at(k), agent_at(k + 1))) throw InputError("path form requires the edges {k,k+1}");
    if (idx(inst_->target_object()) != n - 1) throw InputError("path form requires x at the last position");
    if (idx(inst_->target_agent()) + 1 >= n) throw InputError("path form requires the target left of x");
  }

  const Instance& instance() const { return *inst_; }
  std::size_t size() const { return inst_->agent_count(); }
  std::size_t target() const { return idx(inst_->target_agent()); }
  std::size_t x() const { return size() - 1; }
  /// Number of edges between the target and x; x crosses one object per edge.
  std::size_t edge_indices() const { return size() - 1 - target(); }

  bool prefers(std::size_t agent, std::size_t better, std::size_t worse) const {
    return ranks_.prefers(agent_at(agent), object_at(better), object_at(worse));
  }
  /// Both endpoints of edge {e, e+1} gain when the left one trades `left_obj` for `right_obj`.
  bool rational_at(std::size_t e, std::size_t left_obj, std::size_t right_obj) const {
    return prefers(e, right_obj, left_obj) && prefers(e + 1, left_obj, right_obj);
  }
  const std::string& name(std::size_t obj) const { return inst_->object_name(object_at(obj)); }

 private:
  std::shared_ptr<const Instance> inst_;
  RankTable ranks_;
};

/// Left endpoint j of the only edge {j, j+1} where w and y can pass each
/// other in a sequence after which agent i holds w.
inline std::optional<std::size_t> swap_edge(const PathInstance& p, std::size_t i, std::size_t w, std::size_t y,
                                            Counters* counters = nullptr) {
  if (w == y) return std::nullopt;
  const long a = static_cast<long>(y), c = static_cast<long>(w);
  const long d = c > a ? 1 : -1;
  const long len = (c - a) * d;
  const long ii = (static_cast<long>(i) - a) * d;
  long e;
  if (ii < 0) e = 0;
  else if (ii <= len) e = ii;
  else return std::nullopt;
  auto at = [&](long k) { return static_cast<std::size_t>(a + d * k); };
  if (!p.prefers(at(e), w, y)) return std::nullopt;
  for (long b = e + 1; b <= len; ++b) {
    if (counters) ++counters->swap_edge_steps;
    if (p.prefers(at(b), w, y)) continue;
    if (!p.prefers(at(b), y, w)) return std::nullopt;
    return std::min(at(b - 1), at(b));
  }
  return std::nullopt;
}

enum class Subtype : std::uint8_t { none, left, right };

inline const char* to_string(Subtype s) {
  switch (s) {
    case Subtype::none: return "-";
    case Subtype::left: return "l";
    case Subtype::right: return "r";
  }
  return "?";
}

struct ObjectTyping {
  std::size_t z = 0;
  std::vector<int> type;          // edge index where the object can meet x, 0 if none
  std::vector<bool> candidate;    // may still be the right-mover of its type
  std::vector<Subtype> subtype;
  std::vector<std::optional<std::size_t>> z_edge;  // left endpoint of the edge shared with z
  std::vector<int> hops;          // right-movers that pass the object before it meets z
  bool feasible = true;
  std::string reason;

  bool in_region(std::size_t obj) const { return obj > z && obj + 1 < type.size(); }
  void fail(std::string why) {
    if (feasible) reason = std::move(why);
    feasible = false;
  }
};

/// Types with respect to x for every object; x itself gets 0.
inline std::vector<int> compute_types(const PathInstance& p, Counters* counters = nullptr) {
  const std::size_t n = p.size();
  std::vector<int> type(n, 0);
  for (std::size_t y = 0; y + 1 < n; ++y) {
    auto e = swap_edge(p, p.target(), p.x(), y, counters);
    if (!e) continue;
    long t = static_cast<long>(*e + 1) - static_cast<long>(p.target());
    if (t < 1) throw InternalError("edge shared with x lies left of the target");
    type[y] = static_cast<int>(t);
  }
  return type;
}

namespace detail {

inline std::size_t candidates_of_type(const ObjectTyping& t, int alpha, std::vector<std::size_t>& out) {
  out.clear();
  for (std::size_t y = t.z + 1; y + 1 < t.type.size(); ++y)
    if (t.candidate[y] && t.type[y] == alpha) out.push_back(y);
  return out.size();
}

}  // namespace detail

/// Typing for a guessed z: candidates, edges shared with z and subtypes.
inline ObjectTyping compute_subtypes(const PathInstance& p, std::size_t z, const std::vector<int>& types,
                                     Counters* counters = nullptr) {
  const std::size_t n = p.size();
  ObjectTyping t;
  t.z = z;
  t.type = types;
  t.candidate.assign(n, false);
  t.subtype.assign(n, Subtype::none);
  t.z_edge.assign(n, std::nullopt);
  t.hops.assign(n, -1);
  if (z > p.target() || types[z] != 1) {
    t.fail("z must be an object of type 1 left of the target");
    return t;
  }
  for (std::size_t y = z + 1; y + 1 < n; ++y) {
    t.candidate[y] = types[y] >= 2;
    t.z_edge[y] = swap_edge(p, p.target(), z, y, counters);
    if (t.z_edge[y]) t.hops[y] = static_cast<int>(y - (*t.z_edge[y] + 1));
  }
  const int K = static_cast<int>(p.edge_indices());
  std::vector<std::size_t> objs;
  for (int alpha = 2; alpha <= K; ++alpha) {
    detail::candidates_of_type(t, alpha, objs);
    std::optional<std::size_t> forced;
    for (std::size_t y : objs) {
      if (t.z_edge[y]) continue;
      if (forced) {
        t.fail("two objects of type " + std::to_string(alpha) + " cannot meet z");
        return t;
      }
      forced = y;
    }
    if (forced) {
      for (std::size_t y : objs)
        if (y != *forced) t.candidate[y] = false;
      t.subtype[*forced] = Subtype::left;
      continue;
    }
    for (std::size_t y : objs) t.subtype[y] = alpha <= t.hops[y] + 1 ? Subtype::right : Subtype::left;
  }
  return t;
}

/// Keeps the last l and the first r of each type; an r before an l is fatal.
inline void prune_candidates(ObjectTyping& t) {
  if (!t.feasible) return;
  int K = 0;
  for (int v : t.type) K = std::max(K, v);
  std::vector<std::size_t> objs;
  for (int alpha = 2; alpha <= K; ++alpha) {
    if (detail::candidates_of_type(t, alpha, objs) <= 1) continue;
    std::optional<std::size_t> last_l, first_r;
    for (std::size_t y : objs) {
      if (t.subtype[y] == Subtype::left) {
        if (first_r) {
          t.fail("objects of type " + std::to_string(alpha) + " are not ordered l..r");
          return;
        }
        last_l = y;
      } else if (!first_r) {
        first_r = y;
      }
    }
    for (std::size_t y : objs)
      if (y != last_l && y != first_r) t.candidate[y] = false;
  }
}

/// Demotions forced by objects that must move left, to a fixpoint. Also drops
/// candidates that cannot sit in an increasing chain of types 2..K.
inline void resolve_type0(const PathInstance& p, ObjectTyping& t, Counters* counters = nullptr) {
  if (!t.feasible) return;
  const std::size_t n = p.size();
  const auto K = static_cast<std::size_t>(p.edge_indices());
  const std::size_t none = static_cast<std::size_t>(-1);
  auto tick = [&](std::size_t k) {
    if (counters) counters->pair_checks += k;
  };
  std::vector<std::size_t> need_left(K + 2), need_right(K + 2), upper(K + 2), lower(K + 2);
  std::vector<std::vector<std::size_t>> by_type(K + 1);
  for (bool changed = true; changed;) {
    changed = false;
    tick(n);
    // a left-mover with h right-movers passing it needs types 2..h+1 on its
    // left and h+2..K on its right
    std::fill(need_left.begin(), need_left.end(), none);
    std::fill(need_right.begin(), need_right.end(), none);
    for (std::size_t y = t.z + 1; y + 1 < n; ++y) {
      if (t.candidate[y]) continue;
      if (!t.z_edge[y]) {
        t.fail("object " + p.name(y) + " must move left but cannot meet z");
        return;
      }
      auto h = static_cast<std::size_t>(t.hops[y]);
      if (h + 1 > K) {
        t.fail("object " + p.name(y) + " needs more right-movers than there are edges");
        return;
      }
      auto& l = need_left[h + 1];
      if (l == none || y > l) l = y;
      auto& r = need_right[h + 1];
      if (r == none || y < r) r = y;
    }
    // upper[a]: candidates of type <= a sit left of it; lower[a]: candidates of type > a sit right of it
    std::size_t run = none;
    for (std::size_t a = K; a >= 1; --a) {
      if (need_right[a] != none && (run == none || need_right[a] < run)) run = need_right[a];
      upper[a] = run;
    }
    run = none;
    for (std::size_t a = 1; a <= K; ++a) {
      if (need_left[a] != none && (run == none || need_left[a] > run)) run = need_left[a];
      lower[a] = run;
    }
    for (auto& v : by_type) v.clear();
    for (std::size_t y = t.z + 1; y + 1 < n; ++y) {
      if (!t.candidate[y]) continue;
      auto a = static_cast<std::size_t>(t.type[y]);
      if ((upper[a] != none && y > upper[a]) || (lower[a - 1] != none && y < lower[a - 1])) {
        t.candidate[y] = false;
        changed = true;
        continue;
      }
      by_type[a].push_back(y);
    }
    // increasing chain: a candidate of type a needs one of type a-1 on its
    // left and one of type a+1 on its right
    for (std::size_t a = 3; a <= K; ++a) {
      if (by_type[a - 1].empty()) break;
      std::size_t first = by_type[a - 1].front();
      auto& v = by_type[a];
      tick(v.size());
      auto keep = std::find_if(v.begin(), v.end(), [&](std::size_t y) { return y > first; });
      for (auto it = v.begin(); it != keep; ++it) t.candidate[*it] = false;
      if (keep != v.begin()) changed = true;
      v.erase(v.begin(), keep);
    }
    for (std::size_t a = K - 1; a >= 2; --a) {
      if (by_type[a + 1].empty()) break;
      std::size_t last = by_type[a + 1].back();
      auto& v = by_type[a];
      tick(v.size());
      auto cut = std::find_if(v.begin(), v.end(), [&](std::size_t y) { return y >= last; });
      for (auto it = cut; it != v.end(); ++it) t.candidate[*it] = false;
      if (cut != v.end()) changed = true;
      v.erase(cut, v.end());
    }
    for (std::size_t a = 2; a <= K; ++a)
      if (by_type[a].empty()) {
        t.fail("no object left that can cross x at edge " + std::to_string(a));
        return;
      }
  }
  for (std::size_t y = 0; y < n; ++y)
    if (!t.candidate[y]) t.subtype[y] = Subtype::none;
}

struct Block {
  int alpha = 0;
  int beta = 0;
  std::size_t first = 0;  // leftmost member position
  std::size_t last = 0;   // rightmost member position
  std::vector<std::size_t> left;   // per type alpha..beta: the l candidate (or the only one)
  std::vector<std::size_t> right;  // per type alpha..beta: the r candidate (or the only one)
  std::vector<std::size_t> members;

  std::size_t types() const { return static_cast<std::size_t>(beta - alpha + 1); }
};

/// Consecutive type intervals whose candidates interleave along the path.
inline std::vector<Block> compute_blocks(const PathInstance& p, const ObjectTyping& t) {
  std::vector<Block> blocks;
  if (!t.feasible) return blocks;
  const int K = static_cast<int>(p.edge_indices());
  std::vector<std::size_t> lo(static_cast<std::size_t>(K) + 1), hi(static_cast<std::size_t>(K) + 1);
  std::vector<bool> seen(static_cast<std::size_t>(K) + 1, false);
  for (std::size_t y = t.z + 1; y + 1 < p.size(); ++y) {
    if (!t.candidate[y]) continue;
    auto a = static_cast<std::size_t>(t.type[y]);
    if (!seen[a]) lo[a] = y;
    hi[a] = y;
    seen[a] = true;
  }
  for (int a = 2; a <= K; ++a) {
    auto ua = static_cast<std::size_t>(a);
    if (!seen[ua]) throw InternalError("type without candidate reached block construction");
    if (blocks.empty() || lo[ua] > hi[ua - 1]) {
      blocks.push_back(Block{a, a, lo[ua], hi[ua], {}, {}, {}});
    } else {
      blocks.back().beta = a;
    }
    Block& b = blocks.back();
    b.left.push_back(lo[ua]);
    b.right.push_back(hi[ua]);
    b.last = std::max(b.last, hi[ua]);
  }
  for (auto& b : blocks) {
    for (std::size_t y = b.first; y <= b.last; ++y) {
      if (!t.candidate[y]) throw InternalError("object that must move left sits inside a block");
      b.members.push_back(y);
    }
  }
  return blocks;
}

struct BlockSelection {
  enum class Kind { all_right, chain };
  std::size_t block = 0;
  Kind kind = Kind::all_right;
  std::vector<std::size_t> selected;  // per type alpha..beta
};

inline const char* to_string(BlockSelection::Kind k) { return k == BlockSelection::Kind::all_right ? "R" : "L"; }

/// The all-r selection and, when it exists, the chain started by alpha's l candidate.
inline std::vector<BlockSelection> block_selections(const PathInstance& p,
                                                    const std::vector<Block>& blocks, std::size_t block_id,
                                                    Counters* counters = nullptr) {
  const Block& b = blocks.at(block_id);
  std::vector<BlockSelection> out;
  out.push_back({block_id, BlockSelection::Kind::all_right, b.right});
  const std::size_t m = b.types();
  auto slot = [&](int type) { return static_cast<std::size_t>(type - b.alpha); };

  std::optional<int> gamma;  // first type that takes its r candidate
  int eta = b.alpha;
  for (;;) {
    std::size_t l = b.left[slot(eta)], r = b.right[slot(eta)];
    if (l == r) {
      if (eta == b.beta) gamma = b.beta + 1;
      break;
    }
    auto e = swap_edge(p, p.target() + static_cast<std::size_t>(eta), l, r, counters);
    if (!e) break;
    long need = static_cast<long>(r) - static_cast<long>(*e + 1);
    long between = 0;
    for (int a = eta + 1; a <= b.beta; ++a)
      if (b.left[slot(a)] > l && b.left[slot(a)] < r) ++between;
    if (need > between) break;
    if (need < between) {
      gamma = eta + static_cast<int>(need) + 1;
      break;
    }
    if (between == 0) {
      if (eta == b.beta) gamma = b.beta + 1;
      break;
    }
    eta += static_cast<int>(between);
  }
  if (gamma) {
    BlockSelection s{block_id, BlockSelection::Kind::chain, {}};
    for (std::size_t k = 0; k < m; ++k) s.selected.push_back(b.alpha + static_cast<int>(k) < *gamma ? b.left[k] : b.right[k]);
    bool increasing = true;
    for (std::size_t k = 1; k < m; ++k) increasing = increasing && s.selected[k - 1] < s.selected[k];
    if (increasing) out.push_back(std::move(s));
  }
  if (out.size() == 1 && m == 1 && b.left[0] == b.right[0]) out.push_back({block_id, BlockSelection::Kind::chain, b.right});
  return out;
}

namespace detail {

inline bool contains(const std::vector<std::size_t>& v, std::size_t y) {
  return std::find(v.begin(), v.end(), y) != v.end();
}

// Right-mover `r` meets left-mover `l` (r < l) with `rm_between` right-movers strictly between them.
inline bool crossing_ok(const PathInstance& p, std::size_t r, std::size_t l, long rm_between, Counters* counters) {
  if (counters) ++counters->pair_checks;
  long lm_between = static_cast<long>(l - r - 1) - rm_between;
  if (rm_between < 0 || lm_between < 0) return false;
  return p.rational_at(r + static_cast<std::size_t>(lm_between), r, l);
}

}  // namespace detail

/// Checks a selection against its own block, against left-movers outside
/// blocks and against z.
inline bool selection_consistent(const PathInstance& p, const ObjectTyping& t, const std::vector<Block>& blocks,
                                 const BlockSelection& s, Counters* counters = nullptr) {
  const Block& b = blocks.at(s.block);
  const auto& sel = s.selected;
  for (std::size_t k = 0; k < sel.size(); ++k) {
    std::size_t r = sel[k];
    for (std::size_t l : b.members) {
      if (l <= r || detail::contains(sel, l)) continue;
      long between = 0;
      for (std::size_t q : sel) between += (q > r && q < l);
      if (!detail::crossing_ok(p, r, l, between, counters)) return false;
    }
    int type = b.alpha + static_cast<int>(k);
    for (std::size_t y = b.last + 1; y + 1 < p.size(); ++y) {
      if (t.candidate[y]) continue;
      long between = static_cast<long>(t.hops[y]) - (type - 1);
      if (!detail::crossing_ok(p, r, y, between, counters)) return false;
    }
  }
  for (std::size_t l : b.members) {
    if (detail::contains(sel, l)) continue;
    if (counters) ++counters->pair_checks;
    if (!t.z_edge[l]) return false;
    long before = b.alpha - 2;
    for (std::size_t q : sel) before += (q < l);
    if (before != t.hops[l]) return false;
  }
  return true;
}

/// Every right-mover of sB must be able to cross every left-mover of the later block C.
inline bool selections_compatible(const PathInstance& p, const std::vector<Block>& blocks, const BlockSelection& sB,
                                  const BlockSelection& sC, Counters* counters = nullptr) {
  const Block& B = blocks.at(sB.block);
  const Block& C = blocks.at(sC.block);
  if (B.beta >= C.alpha) throw InternalError("selections_compatible expects blocks in path order");
  const long gap = C.alpha - B.beta - 1;
  for (std::size_t bi = 0; bi < sB.selected.size(); ++bi) {
    std::size_t r = sB.selected[bi];
    long right_of_r = static_cast<long>(sB.selected.size() - bi - 1);
    for (std::size_t l : C.members) {
      if (detail::contains(sC.selected, l)) continue;
      long left_of_l = 0;
      for (std::size_t q : sC.selected) left_of_l += (q < l);
      if (!detail::crossing_ok(p, r, l, right_of_r + left_of_l + gap, counters)) return false;
    }
  }
  return true;
}

struct PathRun {
  Verdict verdict = Verdict::no;
  SwapSequence certificate;  // in path positions
  Counters counters;
  std::optional<std::size_t> z;
  std::vector<std::size_t> right_movers;  // z first, then one per edge index 2..
};

namespace detail {

inline void trace_typing(std::ostream& os, const PathInstance& p, const ObjectTyping& t) {
  os << "  objects:";
  for (std::size_t y = t.z + 1; y + 1 < p.size(); ++y) {
    os << ' ' << p.name(y) << ":t" << t.type[y];
    if (t.candidate[y]) os << to_string(t.subtype[y]);
    else os << (t.z_edge[y] ? "/h" + std::to_string(t.hops[y]) : std::string("/-"));
  }
  os << '\n';
}

// Swaps each adjacent (right-mover, left-mover) pair, leftmost first.
inline SwapSequence enact(const PathInstance& p, std::size_t z, const std::vector<bool>& moves_right, Counters& cnt) {
  const std::size_t n = p.size();
  std::vector<std::size_t> held(n);
  for (std::size_t k = 0; k < n; ++k) held[k] = k;
  SwapSequence seq;
  std::size_t k = z;
  while (k + 1 < n) {
    ++cnt.pair_checks;
    if (moves_right[held[k]] && !moves_right[held[k + 1]]) {
      std::swap(held[k], held[k + 1]);
      seq.push_back({agent_at(k), agent_at(k + 1)});
      k = k > z ? k - 1 : z;
    } else {
      ++k;
    }
  }
  std::size_t last = 0;
  bool first = true;
  for (std::size_t q = z; q < n; ++q) {
    if (!moves_right[held[q]]) continue;
    if (!first && held[q] < last) throw InternalError("right-movers changed their relative order");
    last = held[q];
    first = false;
  }
  return seq;
}

}  // namespace detail

/// Runs the whole pipeline on a path-form instance.
inline PathRun solve_path_form(const PathInstance& p, std::ostream* trace = nullptr) {
  PathRun run;
  Counters& cnt = run.counters;
  const std::size_t n = p.size();
  const std::size_t I = p.target();
  if (!p.prefers(I, p.x(), I)) return run;
  const std::vector<int> types = compute_types(p, &cnt);
  if (trace) {
    *trace << "target position " << I << ", x = " << p.name(p.x()) << ", edge indices 1.." << p.edge_indices() << '\n';
    *trace << "types:";
    for (std::size_t y = 0; y + 1 < n; ++y) *trace << ' ' << p.name(y) << ':' << types[y];
    *trace << '\n';
  }

  for (std::size_t z = 0; z <= I; ++z) {
    if (types[z] != 1) continue;
    if (trace) *trace << "z = " << p.name(z) << '\n';
    ObjectTyping t = compute_subtypes(p, z, types, &cnt);
    prune_candidates(t);
    resolve_type0(p, t, &cnt);
    if (!t.feasible) {
      if (trace) *trace << "  rejected: " << t.reason << '\n';
      continue;
    }
    if (trace) detail::trace_typing(*trace, p, t);
    auto blocks = compute_blocks(p, t);
    const std::size_t nb = blocks.size();
    cnt.pair_checks += n;

    std::vector<std::vector<BlockSelection>> sels(nb);
    std::vector<std::vector<bool>> alive(nb);
    bool dead = false;
    for (std::size_t bi = 0; bi < nb; ++bi) {
      sels[bi] = block_selections(p, blocks, bi, &cnt);
      for (const auto& s : sels[bi]) alive[bi].push_back(selection_consistent(p, t, blocks, s, &cnt));
      if (trace) {
        *trace << "  block [" << blocks[bi].alpha << ',' << blocks[bi].beta << "] positions " << blocks[bi].first << ".."
               << blocks[bi].last << '\n';
        for (std::size_t k = 0; k < sels[bi].size(); ++k) {
          *trace << "    " << to_string(sels[bi][k].kind) << ':';
          for (auto y : sels[bi][k].selected) *trace << ' ' << p.name(y);
          *trace << (alive[bi][k] ? "  consistent" : "  inconsistent") << '\n';
        }
      }
      if (std::none_of(alive[bi].begin(), alive[bi].end(), [](bool v) { return v; })) dead = true;
    }
    if (dead) {
      if (trace) *trace << "  rejected: a block has no consistent selection\n";
      continue;
    }

    // compat[B][C][i][j] for B < C
    auto compatible = [&](std::size_t B, std::size_t i, std::size_t C, std::size_t j) {
      if (B > C) return selections_compatible(p, blocks, sels[C][j], sels[B][i], &cnt);
      return selections_compatible(p, blocks, sels[B][i], sels[C][j], &cnt);
    };
    std::vector<std::vector<std::vector<std::vector<bool>>>> compat(nb, std::vector<std::vector<std::vector<bool>>>(nb));
    for (std::size_t B = 0; B < nb; ++B)
      for (std::size_t C = B + 1; C < nb; ++C) {
        compat[B][C].assign(sels[B].size(), std::vector<bool>(sels[C].size()));
        for (std::size_t i = 0; i < sels[B].size(); ++i)
          for (std::size_t j = 0; j < sels[C].size(); ++j) compat[B][C][i][j] = compatible(B, i, C, j);
      }
    auto ok = [&](std::size_t B, std::size_t i, std::size_t C, std::size_t j) {
      return B < C ? compat[B][C][i][j] : compat[C][B][j][i];
    };

    // drop selections that clash with every surviving selection of some block
    for (std::size_t round = 0; round <= n && !dead; ++round) {
      bool changed = false;
      for (std::size_t B = 0; B < nb; ++B)
        for (std::size_t i = 0; i < sels[B].size(); ++i) {
          if (!alive[B][i]) continue;
          for (std::size_t C = 0; C < nb && alive[B][i]; ++C) {
            if (C == B) continue;
            bool some = false;
            for (std::size_t j = 0; j < sels[C].size(); ++j) {
              ++cnt.pair_checks;
              some = some || (alive[C][j] && ok(B, i, C, j));
            }
            if (!some) {
              alive[B][i] = false;
              changed = true;
            }
          }
        }
      for (std::size_t B = 0; B < nb; ++B)
        if (std::none_of(alive[B].begin(), alive[B].end(), [](bool v) { return v; })) dead = true;
      if (!changed) break;
    }
    if (dead) {
      if (trace) *trace << "  rejected: propagation emptied a block\n";
      continue;
    }

    TwoSatFormula f(nb);
    auto lit = [&](std::size_t B, std::size_t i) {
      return sels[B][i].kind == BlockSelection::Kind::all_right ? pos(B) : neg(B);
    };
    for (std::size_t B = 0; B < nb; ++B)
      for (std::size_t i = 0; i < sels[B].size(); ++i)
        if (!alive[B][i]) f.add_unit(!lit(B, i));
    for (std::size_t B = 0; B < nb; ++B)
      for (std::size_t C = B + 1; C < nb; ++C)
        for (std::size_t i = 0; i < sels[B].size(); ++i)
          for (std::size_t j = 0; j < sels[C].size(); ++j)
            if (alive[B][i] && alive[C][j] && !compat[B][C][i][j]) f.add_clause(!lit(B, i), !lit(C, j));
    auto model = solve_2sat(f);
    if (trace) *trace << "  2-SAT over " << nb << " blocks, " << f.clauses().size() << " clauses: " << (model ? "sat" : "unsat") << '\n';
    if (!model) continue;

    std::vector<bool> moves_right(n, false);
    moves_right[z] = true;
    run.right_movers = {z};
    for (std::size_t B = 0; B < nb; ++B) {
      const BlockSelection* chosen = nullptr;
      for (std::size_t i = 0; i < sels[B].size(); ++i)
        if (alive[B][i] && (sels[B][i].kind == BlockSelection::Kind::all_right) == (*model)[B]) chosen = &sels[B][i];
      if (!chosen) throw InternalError("2-SAT model picks a dropped selection");
      for (std::size_t y : chosen->selected) {
        moves_right[y] = true;
        run.right_movers.push_back(y);
      }
    }
    SwapSequence seq = detail::enact(p, z, moves_right, cnt);
    auto check = verify_certificate(p.instance(), seq);
    if (!check) throw InternalError("path certificate failed verification: " + check.message);
    run.verdict = Verdict::yes;
    run.certificate = std::move(seq);
    run.z = z;
    if (trace) *trace << "  accepted with " << run.certificate.size() << " swaps\n";
    return run;
  }
  if (trace) *trace << "no choice of z works\n";
  return run;
}

/// Decides instances whose graph is a path.
inline Decision solve_path(const Instance& inst, std::ostream* trace = nullptr) {
  Decision d;
  d.algorithm = "path";
  if (!is_path(inst)) throw CapabilityError("graph is not a path; use --algo oracle (or len3 for short lists)");
  if (auto t = trivial_decision(inst)) {
    d.verdict = *t ? Verdict::yes : Verdict::no;
    return d;
  }
  Canonical c = canonicalize_path(inst);
  PathInstance p(c.instance);
  PathRun run = solve_path_form(p, trace);
  d.verdict = run.verdict;
  d.counters = run.counters;
  if (run.verdict == Verdict::yes) {
    d.certificate = c.to_original(run.certificate);
    auto check = verify_certificate(inst, d.certificate);
    if (!check) throw InternalError("path certificate failed verification after relabeling: " + check.message);
  }
  return d;
}

}  // namespace swapreach
