#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "twistspin/error.hpp"
#include "twistspin/knots.hpp"

using namespace twistspin;
using LP = LaurentPolynomial;

namespace {

LP delta_of(const GroupPresentation& p) { return first_elementary_ideal(alexander_matrix(p)).generator; }

std::size_t parse_error_line(const std::string& text) {
  try {
    parse_presentation(text);
  } catch (const ParseError& e) {
    return e.line();
  } catch (const DomainError&) {
  }
  return 0;
}

const char* kTrefoil =
    "# trefoil, Wirtinger\n"
    "gens: a b c\n"
    "weights: a=1 b=1 c=1\n"
    "\n"
    "rel: a b A C   # c = a b a^-1\n"
    "rel: b c B A\n";

}  // namespace

TEST(PresentationFile, ParsesTrefoil) {
  const auto p = parse_presentation(kTrefoil);
  EXPECT_EQ(p.generator_count(), 3);
  EXPECT_EQ(p.relators().size(), 2u);
  EXPECT_FALSE(p.longitude().has_value());
  EXPECT_TRUE(p.has_unit_weights());
}

TEST(PresentationFile, LongitudeVariants) {
  const std::string base = "gens: a b\nweights: a=1 b=1\nrel: a B\n";
  EXPECT_TRUE(parse_presentation(base + "longitude: 1\n").longitude()->is_identity());
  EXPECT_TRUE(parse_presentation(base + "longitude:\n").longitude()->is_identity());
  EXPECT_EQ(parse_presentation(base + "longitude: a B\n").longitude()->length(), 2u);
  EXPECT_EQ(parse_error_line(base + "longitude: a\n"), 4u);
}

TEST(PresentationFile, Errors) {
  EXPECT_EQ(parse_error_line("gens: a\nweights: a=1\nrel:\n"), 3u);
  EXPECT_EQ(parse_error_line("gens: a\nweights: a=1\nrel: a\n"), 0u);  // weight error is semantic
  EXPECT_THROW(parse_presentation("gens: a\nweights: a=1\nrel: a\n"), DomainError);
  EXPECT_EQ(parse_error_line("weights: a=1\ngens: a\n"), 1u);
  EXPECT_EQ(parse_error_line("gens: a a\nweights: a=1\n"), 1u);
  EXPECT_EQ(parse_error_line("gens: a A\nweights: a=1\n"), 1u);
  EXPECT_EQ(parse_error_line("gens: a b\nweights: a=1\n"), 2u);
  EXPECT_EQ(parse_error_line("gens: a\nweights: a=1 a=2\n"), 2u);
  EXPECT_EQ(parse_error_line("gens: a\nweights: b=1\n"), 2u);
  EXPECT_EQ(parse_error_line("gens: a\nweights: a=x\n"), 2u);
  EXPECT_EQ(parse_error_line("gens: a\nweights: a=1\nfoo: a\n"), 3u);
  EXPECT_EQ(parse_error_line("gens: a\nweights: a=1\nno colon\n"), 3u);
  EXPECT_EQ(parse_error_line(""), 1u);

  try {
    parse_presentation("gens: a b\nweights: a=1 b=1\nrel: a q\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 8u);
  }
}

TEST(Braid, ParsesWords) {
  const BraidWord b = parse_braid("B3: s1 s2^-1 s1 s2^-1");
  EXPECT_EQ(b.strand_count, 3);
  EXPECT_EQ(b.letters, (std::vector<int>{1, -2, 1, -2}));
  EXPECT_EQ(b.writhe(), 0);
  EXPECT_EQ(parse_braid("B2: s1^3").letters, (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(parse_braid("B3: S2^2").letters, (std::vector<int>{-2, -2}));
  EXPECT_THROW(parse_braid("B1: "), ParseError);
  EXPECT_THROW(parse_braid("B3: s3"), ParseError);
  EXPECT_THROW(parse_braid("B3 s1"), ParseError);
  EXPECT_THROW(parse_braid("B3: t1"), ParseError);
  EXPECT_THROW(parse_braid("B3: s1^"), ParseError);
}

TEST(Braid, ClosurePermutation) {
  EXPECT_TRUE(parse_braid("B2: s1").closes_to_knot());
  EXPECT_FALSE(parse_braid("B2: s1^2").closes_to_knot());
  EXPECT_TRUE(parse_braid("B3: s1 s2").closes_to_knot());
  EXPECT_FALSE(parse_braid("B3: s1").closes_to_knot());
  EXPECT_THROW(braid_to_presentation(parse_braid("B2: s1^2")), DomainError);
}

TEST(Braid, KnownAlexanderPolynomials) {
  const LP unknot = delta_of(braid_to_presentation(parse_braid("B2: s1")));
  EXPECT_TRUE(is_unit_rational(unknot));

  const LP trefoil = delta_of(braid_to_presentation(parse_braid("B2: s1^3")));
  EXPECT_EQ(trefoil, normalize_up_to_units(torus_knot(2, 3).alexander.to_rational()));

  const LP eight = delta_of(braid_to_presentation(parse_braid("B3: s1 s2^-1 s1 s2^-1")));
  EXPECT_EQ(eight, parse_laurent("1 - 3*T + T^2", Ring::Rat));
  EXPECT_EQ(mpq_class(abs(eight.evaluate(-1))), mpq_class(5));  // determinant of the figure-eight

  const auto hand = parse_presentation(kTrefoil);
  EXPECT_TRUE(equal_up_to_units(delta_of(hand), trefoil));
}

TEST(Braid, MirrorAndConjugateBraidsAgree) {
  const LP a = delta_of(braid_to_presentation(parse_braid("B2: s1^5")));
  const LP b = delta_of(braid_to_presentation(parse_braid("B2: S1^5")));
  const LP c = delta_of(braid_to_presentation(parse_braid("B3: s2 s1 s2 s1 s2 s1 s2 s1")));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, normalize_up_to_units(torus_knot(2, 5).alexander.to_rational()));
  EXPECT_EQ(c, normalize_up_to_units(torus_knot(3, 4).alexander.to_rational()));
}

TEST(Braid, RandomClosuresHaveWeightZeroLongitudesAndSymmetricDelta) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> strands(2, 4), length(1, 12);
  int knots = 0;
  while (knots < 60) {
    BraidWord b;
    b.strand_count = strands(rng);
    std::uniform_int_distribution<int> gen(1, b.strand_count - 1);
    std::bernoulli_distribution inv(0.4);
    const int len = length(rng);
    for (int k = 0; k < len; ++k) b.letters.push_back(inv(rng) ? -gen(rng) : gen(rng));
    if (!b.closes_to_knot()) continue;
    ++knots;
    const auto p = braid_to_presentation(b);
    ASSERT_TRUE(p.longitude().has_value());
    EXPECT_EQ(p.weights().degree(*p.longitude()), 0);
    // Alexander polynomials of knots are symmetric and have |Delta(1)| = 1.
    const LP d = delta_of(p);
    EXPECT_EQ(normalize_up_to_units(d.reflected()), d);
    EXPECT_EQ(mpq_class(abs(d.evaluate(1))), mpq_class(1));
  }
}

TEST(TorusKnot, ClosedForms) {
  EXPECT_EQ(torus_knot(2, 3).alexander, parse_laurent("1 - T + T^2"));
  EXPECT_EQ(torus_knot(2, 5).alexander, parse_laurent("1 - T + T^2 - T^3 + T^4"));
  EXPECT_EQ(torus_knot(3, 5).alexander, parse_laurent("1 - T + T^3 - T^4 + T^5 - T^7 + T^8"));
  EXPECT_THROW(torus_knot(2, 4), DomainError);
  EXPECT_THROW(torus_knot(1, 3), DomainError);
  EXPECT_THROW(torus_knot_braid(3, 6), DomainError);
}

TEST(TorusKnot, PipelineMatchesClosedFormThroughBothPresentations) {
  for (int p = 2; p <= 7; ++p)
    for (int q = p + 1; q <= 7; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto tk = torus_knot(p, q);
      EXPECT_FALSE(tk.presentation.has_unit_weights());
      // Dense division oracle for the closed form.
      const auto num = oracle::mul(oracle::t_power_minus_one(static_cast<std::size_t>(p * q)),
                                   oracle::t_power_minus_one(1));
      const auto den = oracle::mul(oracle::t_power_minus_one(static_cast<std::size_t>(p)),
                                   oracle::t_power_minus_one(static_cast<std::size_t>(q)));
      const auto [quot, rem] = oracle::divmod(num, den);
      ASSERT_TRUE(rem.empty());
      EXPECT_EQ(oracle::monic(tk.alexander), oracle::gcd(quot, {}));
      EXPECT_TRUE(equal_up_to_units(delta_of(tk.presentation), tk.alexander));
      EXPECT_TRUE(equal_up_to_units(delta_of(braid_to_presentation(torus_knot_braid(p, q))),
                                    tk.alexander));
    }
}
