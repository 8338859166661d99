#pragma once

#include <ostream>
#include <string>

#include "swapreach/canonical.hpp"
#include "swapreach/core.hpp"
#include "swapreach/len3.hpp"
#include "swapreach/oracle.hpp"
#include "swapreach/path_solver.hpp"

namespace swapreach {

enum class Algorithm { automatic, len3, path, oracle };

inline Algorithm parse_algorithm(const std::string& s) {
  if (s == "auto") return Algorithm::automatic;
  if (s == "len3") return Algorithm::len3;
  if (s == "path") return Algorithm::path;
  if (s == "oracle") return Algorithm::oracle;
  throw InputError("unknown algorithm '" + s + "' (auto|len3|path|oracle)");
}

/// Whether every effective list (after truncation below the initial object) has at most three entries.
inline bool effective_lists_within(const Instance& inst, std::size_t bound) {
  for (std::size_t a = 0; a < inst.agent_count(); ++a) {
    Agent ag = agent_at(a);
    if (static_cast<std::size_t>(inst.rank(ag, inst.initial(ag))) + 1 > bound) return false;
  }
  return true;
}

/// Path graphs go to the path solver, short lists to len3, everything else to the oracle.
inline Algorithm choose_algorithm(const Instance& inst) {
  if (is_path(inst)) return Algorithm::path;
  if (effective_lists_within(inst, 3)) return Algorithm::len3;
  return Algorithm::oracle;
}

inline Decision solve(const Instance& inst, Algorithm algo = Algorithm::automatic, const OracleOptions& oracle = {},
                      std::ostream* trace = nullptr) {
  if (algo == Algorithm::automatic) algo = choose_algorithm(inst);
  switch (algo) {
    case Algorithm::len3: return solve_len3(inst);
    case Algorithm::path: return solve_path(inst, trace);
    case Algorithm::oracle: return oracle_decide(inst, oracle);
    case Algorithm::automatic: break;
  }
  throw InternalError("unreachable algorithm choice");
}

}  // namespace swapreach
