#include <gtest/gtest.h>

#include <random>
#include <set>

#include "braidcount/coords.hpp"
#include "braidcount/fuzz.hpp"

using namespace braidcount;

TEST(Validate, AcceptsAdmissibleTuples) {
  EXPECT_NO_THROW(validate(2, {0, 0, 0, 0, 0}));
  const auto c = validate(2, {0, 0, 1, 1, 0});
  EXPECT_EQ(c.n(), 2);
  EXPECT_EQ(c.s(1), 1);
  EXPECT_EQ(c.a(2), 1);
  EXPECT_EQ(c.to_string(), "(0,0,1,1,0)");
}

TEST(Validate, ReportsOffendingIndex) {
  try {
    validate(2, {0, 1, 0, 0, 0});
    FAIL() << "expected a CoordinateError";
  } catch (const CoordinateError& e) {
    EXPECT_EQ(e.index(), 1);
  }
}

TEST(Validate, RejectsBadShapeAndBoundaries) {
  EXPECT_THROW(validate(2, {0, 0, 0}), CoordinateError);
  EXPECT_THROW(validate(2, {1, 0, 0, 0, 0}), CoordinateError);
  EXPECT_THROW(validate(2, {0, 0, 1, 0, 1}), CoordinateError);
  EXPECT_THROW(validate(2, {0, 0, -1, 0, 0}), CoordinateError);
  // a_2 range for s = (1, 0) is {0, 1}
  EXPECT_THROW(validate(2, {0, 0, 1, 2, 0}), CoordinateError);
  EXPECT_THROW(validate(0, {0}), std::invalid_argument);
}

TEST(Validate, RangeUpperEndpoint) {
  EXPECT_EQ(a_max(2, 2), 4);
  EXPECT_EQ(a_max(2, 3), 5);
  EXPECT_EQ(a_max(0, 5), 1);
  EXPECT_NO_THROW(validate(3, {0, 1, 2, 5, 3, 1, 0}));
  EXPECT_THROW(validate(3, {0, 1, 2, 6, 3, 1, 0}), CoordinateError);
}

TEST(Parse, AcceptsWhitespaceAndParentheses) {
  EXPECT_EQ(parse_coordinates("( 0, 0 ,2,3,1,0,0 )").flat(),
            (std::vector<int>{0, 0, 2, 3, 1, 0, 0}));
  EXPECT_EQ(parse_coordinates("0,0,1,1,0").n(), 2);
  EXPECT_EQ(parse_coordinates("(0,0,0)").n(), 1);
  EXPECT_THROW(parse_coordinates("(0)"), CoordinateError);
}

TEST(Parse, RejectsMalformedText) {
  EXPECT_THROW(parse_coordinates("(0,0,1,1)"), CoordinateError);
  EXPECT_THROW(parse_coordinates("(0,a,0)"), CoordinateError);
  EXPECT_THROW(parse_coordinates("(0,,0)"), CoordinateError);
  EXPECT_THROW(parse_coordinates(""), CoordinateError);
  EXPECT_THROW(parse_coordinates("(0,1,0)"), CoordinateError);
}

TEST(Norm, Examples) {
  EXPECT_EQ(norm(validate(3, {0, 0, 0, 0, 0, 0, 0})), 2);
  EXPECT_EQ(norm(validate(2, {0, 0, 1, 1, 0})), 3);
  EXPECT_EQ(norm(validate(3, {0, 0, 2, 3, 1, 0, 0})), 8);
}

TEST(Symmetry, Examples) {
  const auto c = validate(2, {0, 0, 1, 1, 0});
  EXPECT_EQ(sym_h(c).flat(), (std::vector<int>{0, 1, 1, 0, 0}));
  EXPECT_EQ(sym_v(c).flat(), (std::vector<int>{0, 1, 1, 0, 0}));
  const auto z = validate(3, {0, 0, 0, 0, 0, 0, 0});
  EXPECT_EQ(sym_h(z), z);
  EXPECT_EQ(sym_v(z), z);
  const auto f = validate(3, {0, 0, 2, 3, 1, 0, 0});
  EXPECT_EQ(sym_h(f).flat(), (std::vector<int>{0, 0, 1, 3, 2, 0, 0}));
  EXPECT_EQ(sym_v(f).flat(), (std::vector<int>{0, 1, 2, 0, 1, 1, 0}));
}

TEST(Symmetry, GroupLawsOnFuzzedTuples) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 5000; ++t) {
    const auto c = random_coordinates(7, 15, rng);
    ASSERT_NO_THROW(validate(c.n(), c.flat())) << c.to_string();
    EXPECT_EQ(sym_h(sym_h(c)), c);
    EXPECT_EQ(sym_v(sym_v(c)), c);
    EXPECT_EQ(sym_h(sym_v(c)), sym_v(sym_h(c)));
    EXPECT_EQ(sym_c(c), sym_h(sym_v(c)));
    EXPECT_NO_THROW(validate(c.n(), sym_c(c).flat()));
  }
}

TEST(SVectors, Examples) {
  const auto v = enumerate_s_vectors(3, 2);
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[0].s, (std::vector<int>{0, 2}));
  EXPECT_EQ(v[1].s, (std::vector<int>{1, 1}));
  EXPECT_EQ(v[2].s, (std::vector<int>{2, 0}));
  const auto w = enumerate_s_vectors(2, 5);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0].s, std::vector<int>{5});
  EXPECT_EQ(enumerate_s_vectors(5, 10).size(), 286u);
  EXPECT_EQ(enumerate_s_vectors(1, 0).size(), 1u);
  EXPECT_TRUE(enumerate_s_vectors(1, 3).empty());
}

TEST(SVectors, StreamMatchesCountAndIsDistinct) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= 9; ++k) {
      const auto v = enumerate_s_vectors(n, k);
      EXPECT_EQ(v.size(), s_vector_count(n, k)) << n << "," << k;
      std::set<std::vector<int>> seen;
      for (const auto& sv : v) {
        int sum = 0;
        for (int x : sv.s) sum += x;
        EXPECT_EQ(sum, k);
        EXPECT_EQ(sv.k, k);
        seen.insert(sv.s);
      }
      EXPECT_EQ(seen.size(), v.size());
    }
  }
}

TEST(SVectors, MakeRejectsBadInput) {
  EXPECT_THROW(make_s_vector(3, {1}), std::invalid_argument);
  EXPECT_THROW(make_s_vector(3, {1, -1}), std::invalid_argument);
  EXPECT_THROW(make_s_vector(0, {}), std::invalid_argument);
}

TEST(ATuples, Examples) {
  EXPECT_EQ(enumerate_a_tuples(make_s_vector(2, {1})).size(), 4u);
  EXPECT_EQ(enumerate_a_tuples(make_s_vector(4, {0, 0, 0})).size(), 1u);
  const auto sv = make_s_vector(3, {1, 2});
  const auto all = enumerate_a_tuples(sv);
  EXPECT_EQ(all.size(), 16u);
  EXPECT_EQ(ATupleOdometer(sv).size(), 16u);
  std::set<std::vector<int>> seen;
  for (const auto& c : all) {
    EXPECT_NO_THROW(validate(3, c.flat()));
    seen.insert(c.flat());
  }
  EXPECT_EQ(seen.size(), 16u);
}

TEST(Fuzz, RandomSVectorsAreCompositions) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 2000; ++t) {
    const int n = 2 + t % 7;
    const int k = t % 31;
    const auto sv = random_s_vector(n, k, rng);
    EXPECT_EQ(static_cast<int>(sv.s.size()), n - 1);
    int sum = 0;
    for (int x : sv.s) {
      EXPECT_GE(x, 0);
      sum += x;
    }
    EXPECT_EQ(sum, k);
  }
}
