#pragma once

// CNF formulas: DIMACS input/output, the occurrence restrictions used by the
// reductions, and a truth-table satisfiability check for small formulas.

#include <cstdlib>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "swapreach/core.hpp"

namespace swapreach {

struct Formula {
  int variables = 0;
  std::vector<std::vector<int>> clauses;  // DIMACS literals, +v / -v, v >= 1

  bool operator==(const Formula&) const = default;
};

// Restricted formulas use the same representation; validity is checked by
// validate_restricted / validate_caterpillar.
using RestrictedFormula = Formula;

inline Formula parse_dimacs(std::istream& in) {
  Formula f;
  std::optional<long> declared_clauses;
  std::vector<int> current;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) -> void { throw InputError("line " + std::to_string(line_no) + ": " + what); };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c" || tok[0] == 'c') continue;
    if (tok == "%") break;  // SATLIB trailer
    if (tok == "p") {
      std::string fmt;
      long v = -1, c = -1;
      if (declared_clauses) fail("duplicate problem line");
      if (!(ls >> fmt >> v >> c) || fmt != "cnf" || v < 0 || c < 0) fail("malformed problem line, expected 'p cnf V C'");
      f.variables = static_cast<int>(v);
      declared_clauses = c;
      continue;
    }
    if (!declared_clauses) fail("clause before problem line");
    do {
      char* end = nullptr;
      long lit = std::strtol(tok.c_str(), &end, 10);
      if (*end != '\0') fail("invalid literal '" + tok + "'");
      if (lit == 0) {
        f.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (std::labs(lit) > f.variables) fail("literal " + tok + " exceeds declared variable count");
      current.push_back(static_cast<int>(lit));
    } while (ls >> tok);
  }
  if (!declared_clauses) throw InputError("missing problem line");
  if (!current.empty()) f.clauses.push_back(std::move(current));
  if (static_cast<long>(f.clauses.size()) != *declared_clauses)
    throw InputError("problem line declares " + std::to_string(*declared_clauses) + " clauses, found " +
                     std::to_string(f.clauses.size()));
  return f;
}

inline Formula parse_dimacs_string(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

inline Formula load_dimacs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return parse_dimacs(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline std::string serialize_dimacs(const Formula& f) {
  std::ostringstream out;
  out << "p cnf " << f.variables << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (int l : c) out << l << ' ';
    out << "0\n";
  }
  return out.str();
}

struct Occurrences {
  std::vector<int> positive;  // clause indices, in formula order
  std::vector<int> negative;
};

/// Clause indices per variable (index 0 unused).
inline std::vector<Occurrences> occurrences(const Formula& f) {
  std::vector<Occurrences> occ(static_cast<std::size_t>(f.variables) + 1);
  for (std::size_t j = 0; j < f.clauses.size(); ++j)
    for (int l : f.clauses[j]) {
      auto& o = occ[static_cast<std::size_t>(std::abs(l))];
      (l > 0 ? o.positive : o.negative).push_back(static_cast<int>(j));
    }
  return occ;
}

namespace detail {

inline std::optional<std::string> check_occurrences(const Formula& f, std::size_t min_size, std::size_t max_size) {
  if (f.variables < 1) return "formula has no variables";
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const auto& c = f.clauses[j];
    if (c.size() < min_size || c.size() > max_size)
      return "clause " + std::to_string(j + 1) + " has " + std::to_string(c.size()) + " literals, expected " +
             std::to_string(min_size) + ".." + std::to_string(max_size);
    for (std::size_t a = 0; a < c.size(); ++a) {
      if (c[a] == 0 || std::abs(c[a]) > f.variables) return "clause " + std::to_string(j + 1) + " has an invalid literal";
      for (std::size_t b = a + 1; b < c.size(); ++b)
        if (std::abs(c[a]) == std::abs(c[b]))
          return "variable " + std::to_string(std::abs(c[a])) + " occurs twice in clause " + std::to_string(j + 1);
    }
  }
  auto occ = occurrences(f);
  for (int v = 1; v <= f.variables; ++v) {
    const auto& o = occ[static_cast<std::size_t>(v)];
    if (o.negative.size() != 1)
      return "variable " + std::to_string(v) + " occurs " + std::to_string(o.negative.size()) +
             " times negatively, expected once";
    if (o.positive.empty() || o.positive.size() > 2)
      return "variable " + std::to_string(v) + " occurs " + std::to_string(o.positive.size()) +
             " times positively, expected once or twice";
  }
  return std::nullopt;
}

}  // namespace detail

/// nullopt when every clause has 2 or 3 literals and every variable occurs
/// once negatively and once or twice positively; otherwise the first violation.
inline std::optional<std::string> validate_restricted(const Formula& f) { return detail::check_occurrences(f, 2, 3); }

/// As validate_restricted, with clauses of 1 to 3 literals.
inline std::optional<std::string> validate_caterpillar(const Formula& f) {
  if (f.clauses.empty()) return "formula has no clauses";
  return detail::check_occurrences(f, 1, 3);
}

inline bool satisfied_by(const Formula& f, std::uint64_t bits) {
  for (const auto& c : f.clauses) {
    bool sat = false;
    for (int l : c) {
      bool val = (bits >> (std::abs(l) - 1)) & 1u;
      if (val == (l > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

/// Truth-table search; small formulas only.
inline std::optional<std::vector<bool>> brute_force_sat(const Formula& f) {
  if (f.variables > 30) throw CapabilityError("truth-table check limited to 30 variables");
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f.variables); ++bits)
    if (satisfied_by(f, bits)) {
      std::vector<bool> model(static_cast<std::size_t>(f.variables));
      for (int v = 0; v < f.variables; ++v) model[static_cast<std::size_t>(v)] = (bits >> v) & 1u;
      return model;
    }
  return std::nullopt;
}

}  // namespace swapreach
