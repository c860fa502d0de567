#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "slalom/errors.hpp"
#include "slalom/random.hpp"
#include "slalom/word.hpp"

using namespace slalom;

namespace {

constexpr Generator A1 = Generator::A1;
constexpr Generator A2 = Generator::A2;

const char* kSampleWord = "a2^-1 a1^2 a2^-3 a1^-1 a2^-1 a1^-1 a2 a1^-1";

FreeWord word(std::initializer_list<Term> terms) { return FreeWord::from_reduced(terms); }

}  // namespace

TEST(ParseWord, ReadsExponents) {
  EXPECT_EQ(parse_word("a1^2 a2^-3"), word({{A1, 2}, {A2, -3}}));
  EXPECT_EQ(parse_word("  a1^+4\ta2  "), word({{A1, 4}, {A2, 1}}));
}

TEST(ParseWord, CancelsToIdentity) {
  EXPECT_TRUE(parse_word("a1 a1^-1").is_identity());
  EXPECT_TRUE(parse_word("").is_identity());
  EXPECT_TRUE(parse_word("a2^0").is_identity());
}

TEST(ParseWord, SampleWordIsAlreadyReduced) {
  const FreeWord w = parse_word(kSampleWord);
  ASSERT_EQ(w.size(), 8u);
  EXPECT_EQ(w, word({{A2, -1}, {A1, 2}, {A2, -3}, {A1, -1}, {A2, -1}, {A1, -1}, {A2, 1}, {A1, -1}}));
}

TEST(ParseWord, ZeroExponentBetweenEqualGeneratorsMerges) {
  EXPECT_EQ(parse_word("a1 a2^0 a1"), word({{A1, 2}}));
}

TEST(ParseWord, ReportsColumnOfBadToken) {
  try {
    parse_word("a1 b2");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 4u);
  }
  try {
    parse_word("a1^x");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 4u);
  }
  EXPECT_THROW(parse_word("a3"), ParseError);
  EXPECT_THROW(parse_word("a1^"), ParseError);
  EXPECT_THROW(parse_word("a1^2x"), ParseError);
  EXPECT_THROW(parse_word("a1^+-2"), ParseError);
  EXPECT_THROW(parse_word("a1a2"), ParseError);
  EXPECT_THROW(parse_word("a1^99999999999999999999"), ParseError);
}

TEST(Reduce, Examples) {
  const std::vector<Term> merge{{A1, 1}, {A1, 1}};
  EXPECT_EQ(reduce(merge), word({{A1, 2}}));
  const std::vector<Term> cascade{{A1, 1}, {A2, 2}, {A2, -2}, {A1, -1}};
  EXPECT_TRUE(reduce(cascade).is_identity());
  const std::vector<Term> reduced{{A2, -1}, {A1, 2}};
  EXPECT_EQ(reduce(reduced), word({{A2, -1}, {A1, 2}}));
}

TEST(Reduce, OverflowIsAnError) {
  const std::vector<Term> raw{{A1, std::numeric_limits<std::int64_t>::max()}, {A1, 1}};
  EXPECT_THROW(reduce(raw), OverflowError);
  const FreeWord extreme = word({{A1, std::numeric_limits<std::int64_t>::min()}});
  EXPECT_THROW(invert(extreme), OverflowError);
}

TEST(FromReduced, RejectsUnreducedInput) {
  EXPECT_THROW(FreeWord::from_reduced({{A1, 1}, {A1, 2}}), DomainError);
  EXPECT_THROW(FreeWord::from_reduced({{A1, 0}}), DomainError);
}

TEST(Concat, Examples) {
  EXPECT_TRUE(concat(parse_word("a1"), parse_word("a1^-1")).is_identity());
  EXPECT_EQ(concat(parse_word("a1^2"), parse_word("a1^3")), parse_word("a1^5"));
  EXPECT_EQ(concat(parse_word("a1 a2"), parse_word("a2^-1 a1")), parse_word("a1^2"));
}

TEST(Invert, Examples) {
  EXPECT_EQ(invert(parse_word("a1^2 a2^-1")), parse_word("a2 a1^-2"));
  EXPECT_TRUE(invert(FreeWord{}).is_identity());
  EXPECT_EQ(invert(parse_word("a1")), parse_word("a1^-1"));
}

TEST(FormatWord, Examples) {
  EXPECT_EQ(format_word(FreeWord{}), "");
  EXPECT_EQ(format_word(word({{A1, 2}})), "a1^2");
  EXPECT_EQ(format_word(word({{A2, -1}, {A1, 1}})), "a2^-1 a1");
}

// Property tests over random reduced words.

TEST(WordProperties, FormatParseRoundTrip) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const FreeWord w = random_reduced_word(rng, 20, 50);
    EXPECT_EQ(parse_word(format_word(w)), w) << format_word(w);
  }
}

TEST(WordProperties, ReduceIsIdempotent) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> gen(0, 1);
  std::uniform_int_distribution<int> exp(-2, 2);
  for (int i = 0; i < 500; ++i) {
    std::vector<Term> raw(static_cast<std::size_t>(i % 25));
    for (Term& t : raw) t = {gen(rng) == 0 ? A1 : A2, exp(rng)};
    const FreeWord once = reduce(raw);
    EXPECT_EQ(reduce(once.terms()), once);
    for (std::size_t j = 1; j < once.size(); ++j) EXPECT_NE(once.terms()[j].gen, once.terms()[j - 1].gen);
  }
}

TEST(WordProperties, GroupAxioms) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    const FreeWord u = random_reduced_word(rng, 20);
    const FreeWord v = random_reduced_word(rng, 20);
    const FreeWord w = random_reduced_word(rng, 20);
    EXPECT_EQ(concat(concat(u, v), w), concat(u, concat(v, w)));
    EXPECT_EQ(invert(invert(u)), u);
    EXPECT_TRUE(concat(u, invert(u)).is_identity());
    EXPECT_EQ(concat(u, FreeWord{}), u);
    EXPECT_EQ(concat(FreeWord{}, u), u);
  }
}
