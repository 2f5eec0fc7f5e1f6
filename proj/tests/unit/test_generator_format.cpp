#include <gtest/gtest.h>

#include "support.hpp"

using namespace compa;

TEST(GeneratorFormat, ParsesDocument) {
  const auto doc = parse_generator_document("# Sym(4)\ndegree: 4\n\n(0 1 2 3)\n(0 1)\n");
  EXPECT_EQ(doc.degree, 4u);
  ASSERT_EQ(doc.generators.size(), 2u);
  EXPECT_EQ(doc.group().order(), 24);
}

TEST(GeneratorFormat, AcceptsIdentityAndCommas) {
  EXPECT_TRUE(parse_cycles("()", 3).is_identity());
  EXPECT_EQ(parse_cycles("(0,1,2)", 3), parse_cycles("(0 1 2)", 3));
  EXPECT_EQ(parse_cycles("(0 1)(2)", 3), parse_cycles("(0 1)", 3));
}

TEST(GeneratorFormat, RoundTrips) {
  const std::vector<Permutation> gens{parse_cycles("(0 4 2)(1 3)", 6), parse_cycles("(5 0)", 6)};
  const auto text = format_generator_document(6, gens);
  const auto doc = parse_generator_document(text);
  EXPECT_EQ(doc.degree, 6u);
  EXPECT_EQ(doc.generators, gens);
}

TEST(GeneratorFormat, ReportsOffendingLine) {
  try {
    parse_generator_document("degree: 4\n(0 1 2 3)\n(0 1 1)\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  try {
    parse_generator_document("degree: 3\n(0 7)\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_generator_document("(0 1)\n"), ParseError);
  EXPECT_THROW(parse_generator_document("degree: x\n"), ParseError);
  EXPECT_THROW(read_generator_file("/nonexistent/file.grp"), Error);
}
