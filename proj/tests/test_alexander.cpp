#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "twistspin/alexander.hpp"
#include "twistspin/error.hpp"
#include "twistspin/knots.hpp"

using namespace twistspin;
using LP = LaurentPolynomial;

namespace {

FreeWord x(int i, int sign = 1) { return FreeWord::generator(i, sign); }

// The longitude line is only a weight-0 word; the identities below hold for
// any such word.
GroupPresentation trefoil_file() {
  return parse_presentation(
      "gens: a b c\n"
      "weights: a=1 b=1 c=1\n"
      "rel: a b A C\n"
      "rel: b c B A\n"
      "longitude: c a B A\n");
}

// Random word of weight 0 under the given weights: a random word followed
// by a correcting power of a generator of weight +-1.
FreeWord balanced_word(std::mt19937_64& rng, int generators, const AbelianizationWeights& wts) {
  FreeWord w = oracle::random_word(rng, generators, 12);
  return w * x(1).power(-wts.degree(w));
}

}  // namespace

TEST(Alexander, HandTrefoil) {
  const auto p = trefoil_file();
  const AlexanderMatrix m = alexander_matrix(p);
  EXPECT_EQ(m.row_count(), 2u);
  EXPECT_EQ(m.columns, 3u);
  EXPECT_EQ(m.source, MatrixSource::Base);
  // d_a(a b a^-1 c^-1) = 1 - a b a^-1 -> 1 - T
  EXPECT_EQ(m.at(0, 0), parse_laurent("1 - T"));
  EXPECT_EQ(m.at(0, 1), parse_laurent("T"));
  EXPECT_EQ(m.at(0, 2), parse_laurent("-1"));
  EXPECT_EQ(first_elementary_ideal(m).generator, parse_laurent("1 - T + T^2", Ring::Rat));
}

TEST(Alexander, UnknotAndDegenerateShapes) {
  const GroupPresentation unknot({"a"}, {}, AbelianizationWeights::uniform(1), FreeWord());
  const AlexanderMatrix m = alexander_matrix(unknot);
  EXPECT_EQ(m.row_count(), 0u);
  EXPECT_EQ(m.columns, 1u);
  EXPECT_TRUE(first_elementary_ideal(m).is_unit());

  AlexanderMatrix empty;
  empty.columns = 3;
  const auto ideal = first_elementary_ideal(empty);
  EXPECT_TRUE(ideal.generator.is_zero());
  EXPECT_NE(ideal.note.find("zero ideal"), std::string::npos);
}

TEST(Alexander, RowIdentityHoldsForRandomPresentations) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> weight(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::map<int, std::int64_t> w{{1, 1}};
    for (int g = 2; g <= 4; ++g) w[g] = weight(rng);
    const AbelianizationWeights wts(w);
    std::vector<FreeWord> rels;
    for (int k = 0; k < 3; ++k) rels.push_back(balanced_word(rng, 4, wts));
    const GroupPresentation p({"a", "b", "c", "d"}, rels, wts);
    const AlexanderMatrix m = alexander_matrix(p);
    for (const auto& row : m.rows) {
      LP sum;
      for (int i = 1; i <= 4; ++i)
        sum += row[static_cast<std::size_t>(i - 1)] *
               (LP::power_of_t(wts.weight(i)) - LP::constant(1));
      EXPECT_TRUE(sum.is_zero());
    }
  }
}

TEST(Alexander, ElementaryIdealMatchesMinorEnumeration) {
  std::mt19937_64 rng(123);
  std::uniform_int_distribution<int> rows_d(0, 4), cols_d(1, 4);
  for (int trial = 0; trial < 150; ++trial) {
    AlexanderMatrix m;
    m.columns = static_cast<std::size_t>(cols_d(rng));
    const int rows = rows_d(rng);
    for (int r = 0; r < rows; ++r) {
      std::vector<LP> row;
      for (std::size_t c = 0; c < m.columns; ++c) row.push_back(oracle::random_laurent(rng, 3, 2, 3));
      m.rows.push_back(std::move(row));
    }
    const LP g = first_elementary_ideal(m).generator;
    EXPECT_EQ(oracle::monic(g), oracle::first_elementary_ideal_by_minors(m.rows, m.columns))
        << "trial " << trial;
  }
}

TEST(Alexander, ElementaryIdealOfKnownMatrices) {
  // diag(T - 1, (T - 1)(T + 1)) with an extra column of zeros: M - 1 = 2.
  AlexanderMatrix m;
  m.columns = 3;
  m.rows = {{parse_laurent("T - 1"), LP(), LP()}, {LP(), parse_laurent("T^2 - 1"), LP()}};
  EXPECT_EQ(first_elementary_ideal(m).generator,
            normalize_up_to_units(parse_laurent("T - 1", Ring::Rat) * parse_laurent("T^2 - 1", Ring::Rat)));
}

TEST(TwistRollSpin, PresentationAppendsCommutators) {
  const auto p = trefoil_file();
  const auto spun = twist_roll_spin_presentation(p, 2, 0);
  EXPECT_EQ(spun.relators().size(), 5u);
  const GroupPresentation unknot({"a"}, {}, AbelianizationWeights::uniform(1), FreeWord());
  const auto u = twist_roll_spin_presentation(unknot, 2, 0);
  ASSERT_EQ(u.relators().size(), 1u);
  EXPECT_TRUE(u.relators()[0].is_identity());
  const GroupPresentation no_longitude({"a"}, {}, AbelianizationWeights::uniform(1));
  EXPECT_THROW(twist_roll_spin_presentation(no_longitude, 1, 0), DomainError);
  EXPECT_THROW(twist_roll_spin_matrix(no_longitude, 1, 0), DomainError);
}

TEST(TwistRollSpin, ClosedFormMatchesFoxCalculusEntrywise) {
  const std::vector<GroupPresentation> knots = {
      trefoil_file(), braid_to_presentation(parse_braid("B3: s1 s2^-1 s1 s2^-1")),
      braid_to_presentation(torus_knot_braid(3, 4))};
  for (const auto& p : knots)
    for (std::int64_t m = 0; m <= 6; ++m)
      for (std::int64_t n = 0; n <= 3; ++n) {
        const AlexanderMatrix closed = twist_roll_spin_matrix(p, m, n);
        const AlexanderMatrix fox = alexander_matrix(twist_roll_spin_presentation(p, m, n));
        ASSERT_EQ(closed.rows.size(), fox.rows.size());
        for (std::size_t r = 0; r < fox.rows.size(); ++r)
          for (std::size_t c = 0; c < fox.columns; ++c)
            EXPECT_EQ(closed.at(r, c), fox.at(r, c)) << "m=" << m << " n=" << n;
        EXPECT_EQ(closed.source, MatrixSource::TwistRoll);
        EXPECT_EQ(closed.twist_roll.m, m);
      }
}

TEST(TwistRollSpin, UnitWeightRowsHaveTheDisplayedShape) {
  // (delta_ij - delta_i1)(T^m - 1) + n T^m (1 - T) [d_i lambda]
  const auto p = trefoil_file();
  const std::int64_t m = 3, n = 2;
  const AlexanderMatrix mat = twist_roll_spin_matrix(p, m, n);
  const LP f = LP::power_of_t(m) * (LP::constant(1) - LP::power_of_t(1));
  const std::size_t base = p.relators().size();
  for (int j = 1; j <= 3; ++j)
    for (int i = 1; i <= 3; ++i) {
      LP expected = f.scaled(n) * abelianized_fox_derivative(i, *p.longitude(), p.weights());
      const int delta = (i == j ? 1 : 0) - (i == 1 ? 1 : 0);
      expected += LP::t_power_minus_one(m).scaled(delta);
      EXPECT_EQ(mat.at(base + static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1)),
                expected);
    }
}

TEST(TwistRollSpin, NegativeTwistDefinesTheSameIdeal) {
  const auto p = trefoil_file();
  for (std::int64_t m = 1; m <= 6; ++m)
    for (std::int64_t n = -2; n <= 2; ++n) {
      const auto a = first_elementary_ideal(twist_roll_spin_matrix(p, -m, -n)).generator;
      const auto b = first_elementary_ideal(alexander_matrix(twist_roll_spin_presentation(p, -m, -n))).generator;
      EXPECT_EQ(a, b);
    }
}

TEST(TwistRollSpin, RollSpinsKeepTheKnotIdeal) {
  const auto trefoil = braid_to_presentation(parse_braid("B2: s1^3"));
  const auto eight = braid_to_presentation(parse_braid("B3: s1 s2^-1 s1 s2^-1"));
  for (const auto* p : {&trefoil, &eight}) {
    const LP knot = first_elementary_ideal(alexander_matrix(*p)).generator;
    for (std::int64_t n = 0; n <= 3; ++n)
      EXPECT_TRUE(equal_up_to_units(first_elementary_ideal(twist_roll_spin_matrix(*p, 0, n)).generator, knot));
  }
}

TEST(TwistRollSpin, RationalHomologyBallCriterion) {
  const LP delta = parse_laurent("T^2 - T + 1");
  for (std::int64_t m = 1; m <= 12; ++m)
    EXPECT_EQ(bounds_rational_homology_ball(delta, m), m % 6 != 0) << m;
  EXPECT_FALSE(bounds_rational_homology_ball(delta, -6));
  EXPECT_THROW(bounds_rational_homology_ball(delta, 0), DomainError);
  EXPECT_TRUE(obstruct_roll_spin(trefoil_file()));
  const GroupPresentation unknot({"a"}, {}, AbelianizationWeights::uniform(1), FreeWord());
  EXPECT_FALSE(obstruct_roll_spin(unknot));
}

TEST(TwistRollSpin, InclusionReportForTheTrefoil) {
  const auto p = trefoil_file();
  for (std::int64_t m = 1; m <= 12; ++m) {
    const auto report = ideal_inclusion_report(p, m, 0);
    EXPECT_TRUE(report.holds);
    EXPECT_EQ(report.base_gcd, gcd_rational(parse_laurent("T^2 - T + 1"), LP::t_power_minus_one(m)));
  }
}

TEST(Presentation, ValidationErrors) {
  EXPECT_THROW(GroupPresentation({"a", "b"}, {x(1)}, AbelianizationWeights::uniform(2)), DomainError);
  EXPECT_THROW(GroupPresentation({"a"}, {x(2) * x(1, -1)}, AbelianizationWeights::uniform(2)),
               DomainError);
  EXPECT_THROW(GroupPresentation({"a", "b"}, {}, AbelianizationWeights::uniform(1)), DomainError);
  EXPECT_THROW(GroupPresentation({"a"}, {}, AbelianizationWeights::uniform(1), x(1)), DomainError);
}
