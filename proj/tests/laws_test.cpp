#include <gtest/gtest.h>

#include "ncc/law_io.hpp"
#include "ncc/random.hpp"

using namespace ncc;

namespace {

int parse_error_line(const std::string& text) {
  try {
    law_read(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST(Word, Basics) {
  Word w{1, 2, 1};
  EXPECT_EQ(w.to_string(), "1 2 1");
  EXPECT_EQ(w.restrict({1, 3}), (Word{1, 1}));
  EXPECT_EQ(w.restrict_mask(0b110), (Word{2, 1}));
  EXPECT_EQ(w.slice(1, 3), (Word{2, 1}));
  EXPECT_EQ((Word{1} + Word{2, 2}), (Word{1, 2, 2}));
  EXPECT_EQ(power_word(3, 2), (Word{2, 2, 2}));
  EXPECT_LT(Word{2}, (Word{1, 1}));
  EXPECT_LT((Word{1, 2}), (Word{2, 1}));
  EXPECT_EQ(words_of_length(2, 3).size(), 8u);
  EXPECT_EQ(words_up_to(3, 2).size(), 12u);
}

TEST(WordTable, ShortlexIndexing) {
  Law t(2, 3);
  EXPECT_EQ(t.entry_count(), 14u);
  auto words = t.words();
  for (std::size_t i = 0; i < words.size(); ++i) EXPECT_EQ(t.index(words[i]), i);
  EXPECT_TRUE(t.contains(Word{2, 1, 2}));
  EXPECT_FALSE(t.contains(Word{3}));
  EXPECT_FALSE(t.contains(Word{1, 1, 1, 1}));
}

TEST(LawIo, MinimalFile) {
  Law law = law_read("vars 1\norder 1\n1 : 0, 1\n");
  EXPECT_EQ(law.at(Word{1}), GScalar(0, 1));
  Law plain = law_read("# comment\nvars 1\norder 2\n\n1 : 1/2   # trailing\n1 1 : 3\n");
  EXPECT_EQ(plain.at(Word{1}), GScalar(frac(1, 2)));
  EXPECT_EQ(plain.at(Word{1, 1}), GScalar(3));
  EXPECT_EQ(law_read("vars 1\norder 1\n : 1\n1 : 2\n").at(Word{1}), GScalar(2));
}

TEST(LawIo, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("vars 1\norder 2\n1 : 0\n"), 3);                  // missing word 1 1
  EXPECT_EQ(parse_error_line("vars 1\norder 1\n1 : 0\n1 : 1\n"), 4);           // duplicate
  EXPECT_EQ(parse_error_line("vars 1\norder 1\n2 : 0\n"), 3);                  // letter > k
  EXPECT_EQ(parse_error_line("vars 1\norder 1\n1 : 1/0\n"), 3);                // bad rational
  EXPECT_EQ(parse_error_line("vars 1\nfoo 3\norder 1\n1 : 0\n"), 2);           // unknown directive
  EXPECT_EQ(parse_error_line("vars 1\norder 1\n1 1 : 0\n"), 3);                // too long
  EXPECT_EQ(parse_error_line("vars 1\norder 1\n : 2\n1 : 0\n"), 3);            // empty word != 1
  EXPECT_EQ(parse_error_line("1 : 0\nvars 1\norder 1\n"), 1);                  // entry before header
  EXPECT_EQ(parse_error_line("vars 1\norder 1\n1 : 0, 1, 2\n"), 3);            // too many values
  EXPECT_EQ(parse_error_line("vars 1\norder 1\nfamily free\n1 : 0\n"), 3);     // family only for tables
  EXPECT_THROW(law_read("order 1\n"), ParseError);
  EXPECT_THROW(law_read("vars 0\norder 1\n"), ParseError);
}

TEST(LawIo, CanonicalOutputAndRoundTrip) {
  Law law = law_read("vars 2\norder 1\n2 : -2/4\n1 : 3, 0\n");
  EXPECT_EQ(law_write(law), "vars 2\norder 1\n1 : 3, 0\n2 : -1/2, 0\n");
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    Law l = random_law(2, 4, rng);
    std::string text = law_write(l);
    EXPECT_EQ(law_read(text), l);
    EXPECT_EQ(law_write(law_read(text)), text);
  }
}

TEST(LawIo, CumulantTables) {
  CumulantTable t{CumulantFamily::monotone, law_read("vars 1\norder 2\n1 : 1\n1 1 : 2, 3\n")};
  std::string text = cumulant_table_write(t);
  EXPECT_EQ(text, "vars 1\norder 2\nfamily monotone\n1 : 1, 0\n1 1 : 2, 3\n");
  EXPECT_EQ(cumulant_table_read(text), t);
  EXPECT_THROW(cumulant_table_read("vars 1\norder 1\n1 : 0\n"), ParseError);
  EXPECT_THROW(cumulant_table_read("vars 1\norder 1\nfamily tensor\n1 : 0\n"), ParseError);
}

TEST(Extension, WorkedExamples) {
  Rng rng(2);
  Law f = random_law(2, 3, rng);
  Word w{1, 2, 1};
  EXPECT_EQ(extend_over_partition(f, Partition::coarsest(3), w), f.at(w));
  EXPECT_EQ(extend_over_partition(f, Partition(3, {{1, 3}, {2}}), w), f.at(Word{1, 1}) * f.at(Word{2}));
  EXPECT_EQ(extend_over_partition(f, Partition::finest(3), w), f.at(Word{1}) * f.at(Word{2}) * f.at(Word{1}));
  EXPECT_THROW(extend_over_partition(f, Partition::finest(2), w), DimensionError);
}

TEST(Extension, BodyAndSoulMatchSeparateFormulas) {
  Rng rng(9);
  for (int k = 1; k <= 2; ++k) {
    Law f = random_law(k, 5, rng);
    auto body = body_of(f), soul = soul_of(f);
    for (int n = 1; n <= 5; ++n)
      for (const auto& pi : cached_partitions(n, PartitionFamily::all))
        for (const Word& w : words_of_length(k, n)) {
          GScalar g = extend_over_partition(f, pi, w);
          Rational b = 1, d = 0;
          for (const auto& V : pi.blocks()) b *= body.at(w.restrict(V));
          for (const auto& V : pi.blocks()) {
            Rational term = soul.at(w.restrict(V));
            for (const auto& W : pi.blocks())
              if (W != V) term *= body.at(w.restrict(W));
            d += term;
          }
          ASSERT_EQ(g.body, b);
          ASSERT_EQ(g.soul, d);
          ASSERT_EQ(derivative_over_partition(body, soul, pi, w), d);
        }
  }
}

TEST(Law, MergeAndSplit) {
  Rng rng(4);
  Law f = random_law(2, 3, rng);
  EXPECT_EQ(merge(body_of(f), soul_of(f)), f);
  auto t = truncate(f, 2);
  EXPECT_EQ(t.order(), 2);
  EXPECT_EQ(t.at(Word{2, 1}), f.at(Word{2, 1}));
  EXPECT_THROW(truncate(f, 4), DimensionError);
  EXPECT_THROW(merge(body_of(f), body_of(truncate(f, 2))), DimensionError);
}
