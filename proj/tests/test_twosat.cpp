#include <gtest/gtest.h>

#include <random>

#include "swapreach/twosat.hpp"

using namespace swapreach;

namespace {

bool truth_table(const TwoSatFormula& f) {
  const std::size_t n = f.variable_count();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    std::vector<bool> model(n);
    for (std::size_t v = 0; v < n; ++v) model[v] = bits >> v & 1u;
    if (f.satisfied_by(model)) return true;
  }
  return false;
}

TwoSatFormula random_formula(std::size_t vars, std::size_t clauses, std::mt19937_64& rng) {
  TwoSatFormula f(vars);
  std::uniform_int_distribution<std::size_t> var(0, vars - 1);
  std::bernoulli_distribution sign(0.5);
  for (std::size_t k = 0; k < clauses; ++k) f.add_clause({var(rng), sign(rng)}, {var(rng), sign(rng)});
  return f;
}

}  // namespace

TEST(TwoSat, EmptyFormulaIsSatisfiable) {
  TwoSatFormula f(3);
  auto m = solve_2sat(f);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->size(), 3u);
}

TEST(TwoSat, UnitConflict) {
  TwoSatFormula f(1);
  f.add_unit(pos(0));
  f.add_unit(neg(0));
  EXPECT_FALSE(solve_2sat(f).has_value());
}

TEST(TwoSat, ImplicationChain) {
  TwoSatFormula f(4);
  f.add_unit(pos(0));
  for (std::size_t v = 0; v + 1 < 4; ++v) f.add_clause(neg(v), pos(v + 1));
  auto m = solve_2sat(f);
  ASSERT_TRUE(m.has_value());
  for (bool b : *m) EXPECT_TRUE(b);
  f.add_unit(neg(3));
  EXPECT_FALSE(solve_2sat(f).has_value());
}

TEST(TwoSat, AddVariableGrowsFormula) {
  TwoSatFormula f;
  auto a = f.add_variable();
  auto b = f.add_variable();
  f.add_clause(pos(a), pos(b));
  f.add_clause(neg(a), neg(b));
  auto m = solve_2sat(f);
  ASSERT_TRUE(m.has_value());
  EXPECT_NE((*m)[a], (*m)[b]);
}

TEST(TwoSat, AllClauseSetsOverTwoVariables) {
  // 16 possible clauses over 2 variables (with repeats); every subset
  std::vector<std::pair<Literal, Literal>> pool;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a; b < 4; ++b) pool.push_back({{a / 2, a % 2 == 0}, {b / 2, b % 2 == 0}});
  for (std::uint32_t mask = 0; mask < (1u << pool.size()); ++mask) {
    TwoSatFormula f(2);
    for (std::size_t k = 0; k < pool.size(); ++k)
      if (mask >> k & 1u) f.add_clause(pool[k].first, pool[k].second);
    auto m = solve_2sat(f);
    ASSERT_EQ(m.has_value(), truth_table(f)) << mask;
    if (m) {
      EXPECT_TRUE(f.satisfied_by(*m));
    }
  }
}

TEST(TwoSat, RandomAgreesWithTruthTable) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 500; ++k) {
    std::size_t vars = 1 + k % 12;
    auto f = random_formula(vars, 1 + rng() % (3 * vars), rng);
    auto m = solve_2sat(f);
    ASSERT_EQ(m.has_value(), truth_table(f));
    if (m) {
      EXPECT_TRUE(f.satisfied_by(*m));
    }
  }
}
