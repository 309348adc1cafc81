#include "latforge/lattice_io.hpp"

#include <gtest/gtest.h>

#include <string>

#include "latforge/error.hpp"
#include "latforge/generators.hpp"
#include "test_util.hpp"

namespace latforge {
namespace {

TEST(ParseLatticeTest, Identity) {
  EXPECT_EQ(parse_lattice("[[1 0][0 1]]").basis, Basis::identity(2));
  EXPECT_EQ(parse_lattice("  [\n[ 1  0 ]\n\t[0 +1]\n]\n").basis,
            Basis::identity(2));
}

TEST(ParseLatticeTest, HugeEntriesExact) {
  std::string digits = "9";
  for (int i = 0; i < 899; ++i) digits += static_cast<char>('0' + i % 10);
  const auto file = parse_lattice("[[-" + digits + " 1][0 1]]");
  EXPECT_EQ(file.basis[0][0], Integer("-" + digits));
  EXPECT_EQ(file.basis[0][0].get_str().size(), 901u);
}

TEST(ParseLatticeTest, RankDeficient) {
  try {
    parse_lattice("[[1 0][2 0]]");
    FAIL();
  } catch (const LatticeError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRankDeficient);
  }
  EXPECT_THROW(parse_lattice("[[1 0][0 1][1 1]]"), LatticeError);
}

ParseError parse_error(const std::string& text) {
  try {
    parse_lattice(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError for: " << text;
  return ParseError(0, 0, "");
}

TEST(ParseLatticeTest, ErrorsCarryLineAndColumn) {
  const ParseError bad_char = parse_error("[[1 0]\n [0 x1]]");
  EXPECT_EQ(bad_char.line(), 2u);
  EXPECT_EQ(bad_char.column(), 5u);
  EXPECT_NE(std::string(bad_char.what()).find("line 2, column 5"),
            std::string::npos);

  const ParseError ragged = parse_error("[[1 0]\n[0 1 2]]");
  EXPECT_EQ(ragged.line(), 2u);
  EXPECT_EQ(ragged.column(), 1u);

  EXPECT_EQ(parse_error("[[1 2a]]").column(), 6u);
  EXPECT_EQ(parse_error("[[1 0][0 1]").line(), 1u);
  EXPECT_EQ(parse_error("").line(), 1u);
  EXPECT_EQ(parse_error("[[1 0][0 1]] x").column(), 14u);
  EXPECT_EQ(parse_error("[[]]").column(), 2u);
  EXPECT_EQ(parse_error("[[1 - 2]]").column(), 5u);
}

TEST(SerializeLatticeTest, RoundTrip) {
  Rng rng(91);
  for (int trial = 0; trial < 20; ++trial) {
    const Basis b = trial % 2 == 0
                        ? random_basis(5, 7, -999, 999, rng)
                        : knapsack_lattice_digits(6, 40 + trial, rng);
    const std::string text = serialize_lattice(b);
    const Basis parsed = parse_lattice(text).basis;
    EXPECT_EQ(parsed, b);
    EXPECT_EQ(serialize_lattice(parsed), text);
  }
}

}  // namespace
}  // namespace latforge
