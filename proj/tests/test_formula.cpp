#include <gtest/gtest.h>

#include "swapreach/formula.hpp"

using namespace swapreach;

namespace {

std::string dimacs_error(const std::string& text) {
  try {
    parse_dimacs_string(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Dimacs, ParsesCommentsAndMultiLineClauses) {
  Formula f = parse_dimacs_string("c hello\np cnf 3 2\n1 -2\n 3 0 -1\n2 0\n");
  EXPECT_EQ(f.variables, 3);
  ASSERT_EQ(f.clauses.size(), 2u);
  EXPECT_EQ(f.clauses[0], (std::vector<int>{1, -2, 3}));
  EXPECT_EQ(f.clauses[1], (std::vector<int>{-1, 2}));
}

TEST(Dimacs, RoundTrip) {
  Formula f = load_dimacs(SWAPREACH_DATA_DIR "/example1.cnf");
  EXPECT_EQ(parse_dimacs_string(serialize_dimacs(f)), f);
}

TEST(Dimacs, ErrorsCarryLineNumbers) {
  EXPECT_NE(dimacs_error("1 2 0\n").find("line 1"), std::string::npos);
  EXPECT_NE(dimacs_error("p cnf 2 1\n1 5 0\n").find("line 2"), std::string::npos);
  EXPECT_NE(dimacs_error("p cnf 2 1\n1 q 0\n").find("line 2"), std::string::npos);
  EXPECT_NE(dimacs_error("p dnf 2 1\n").find("line 1"), std::string::npos);
  EXPECT_NE(dimacs_error("p cnf 2 2\n1 0\n").find("declares 2"), std::string::npos);
  EXPECT_NE(dimacs_error("c nothing\n").find("problem line"), std::string::npos);
  EXPECT_THROW(load_dimacs("/nonexistent.cnf"), InputError);
}

TEST(Restricted, AcceptsValidFormulas) {
  EXPECT_FALSE(validate_restricted(parse_dimacs_string("p cnf 2 2\n1 2 0\n-1 -2 0\n")));
  EXPECT_FALSE(validate_restricted(load_dimacs(SWAPREACH_DATA_DIR "/example1.cnf")));
}

TEST(Restricted, NamesTheOffendingVariable) {
  auto twice_negative = validate_restricted(parse_dimacs_string("p cnf 2 3\n1 2 0\n-1 -2 0\n-1 2 0\n"));
  ASSERT_TRUE(twice_negative);
  EXPECT_NE(twice_negative->find("variable 1"), std::string::npos);

  auto never_positive = validate_restricted(parse_dimacs_string("p cnf 2 2\n1 -2 0\n-1 1 0\n"));
  ASSERT_TRUE(never_positive);

  auto three_positive = validate_restricted(parse_dimacs_string("p cnf 2 4\n1 2 0\n1 -2 0\n1 2 0\n-1 2 0\n"));
  ASSERT_TRUE(three_positive);

  auto unit = validate_restricted(parse_dimacs_string("p cnf 1 2\n1 0\n-1 0\n"));
  ASSERT_TRUE(unit);
  EXPECT_NE(unit->find("clause 1"), std::string::npos);

  auto repeat = validate_restricted(parse_dimacs_string("p cnf 2 2\n1 -1 2 0\n-2 1 0\n"));
  ASSERT_TRUE(repeat);
  EXPECT_NE(repeat->find("twice"), std::string::npos);
}

TEST(Caterpillar, AllowsUnitClauses) {
  EXPECT_FALSE(validate_caterpillar(load_dimacs(SWAPREACH_DATA_DIR "/cat_unsat.cnf")));
  EXPECT_FALSE(validate_caterpillar(load_dimacs(SWAPREACH_DATA_DIR "/cat_unsat3.cnf")));
  EXPECT_TRUE(validate_caterpillar(parse_dimacs_string("p cnf 1 0\n")));
  EXPECT_TRUE(validate_caterpillar(parse_dimacs_string("p cnf 1 1\n1 0\n")));
}

TEST(TruthTable, FindsModels) {
  Formula sat = load_dimacs(SWAPREACH_DATA_DIR "/cat_sat.cnf");
  auto m = brute_force_sat(sat);
  ASSERT_TRUE(m);
  std::uint64_t bits = 0;
  for (std::size_t v = 0; v < m->size(); ++v) bits |= std::uint64_t{(*m)[v]} << v;
  EXPECT_TRUE(satisfied_by(sat, bits));
  EXPECT_FALSE(brute_force_sat(load_dimacs(SWAPREACH_DATA_DIR "/cat_unsat.cnf")));
  EXPECT_FALSE(brute_force_sat(load_dimacs(SWAPREACH_DATA_DIR "/cat_unsat3.cnf")));
  EXPECT_TRUE(brute_force_sat(parse_dimacs_string("p cnf 2 0\n")));
}

TEST(Occurrences, ListsClausesPerVariable) {
  auto occ = occurrences(load_dimacs(SWAPREACH_DATA_DIR "/example1.cnf"));
  ASSERT_EQ(occ.size(), 5u);
  EXPECT_EQ(occ[2].positive, (std::vector<int>{0, 2}));
  EXPECT_EQ(occ[2].negative, (std::vector<int>{1}));
  EXPECT_EQ(occ[4].positive, (std::vector<int>{2}));
}
