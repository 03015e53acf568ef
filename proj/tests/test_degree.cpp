#include <gtest/gtest.h>

#include <numeric>

#include "twistspin/degree.hpp"
#include "twistspin/error.hpp"

using namespace twistspin;

namespace {

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Even model: rank 2k, J swaps e_{2i} and e_{2i+1}.
GradedEndomorphismPair even_model(std::size_t k) {
  IntMatrix j(2 * k, std::vector<std::int64_t>(2 * k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    j[2 * i][2 * i + 1] = 1;
    j[2 * i + 1][2 * i] = 1;
  }
  return GradedEndomorphismPair(std::vector<Parity>(2 * k, Parity::Even), j, j);
}

// Odd model: Z^{2k} / <(1, ..., 1)> in the basis e_i - e_{2k}, with the
// permutation swapping 2i and 2i+1 (0-based) pushed down to the quotient.
GradedEndomorphismPair odd_model(std::size_t k) {
  const std::size_t n = 2 * k;
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i ^ 1;
  // b_i = e_i - e_{n-1}; sigma(b_i) = e_{perm i} - e_{perm (n-1)}.
  IntMatrix j(n - 1, std::vector<std::int64_t>(n - 1, 0));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t a = perm[i], b = perm[n - 1];
    if (a != n - 1) j[a][i] += 1;
    if (b != n - 1) j[b][i] -= 1;
  }
  return GradedEndomorphismPair(std::vector<Parity>(n - 1, Parity::Odd), j, j);
}

}  // namespace

TEST(GradedPair, Validation) {
  const IntMatrix swap = {{0, 1}, {1, 0}};
  EXPECT_NO_THROW(GradedEndomorphismPair({Parity::Even, Parity::Even}, identity(2), swap));
  EXPECT_THROW(GradedEndomorphismPair({Parity::Even, Parity::Odd}, identity(2), swap), DomainError);
  EXPECT_THROW(GradedEndomorphismPair({Parity::Even}, identity(2), swap), DomainError);
  EXPECT_THROW(GradedEndomorphismPair({Parity::Even, Parity::Even}, identity(2), {{1, 1}, {0, 1}}),
               DomainError);
  EXPECT_THROW(GradedEndomorphismPair({Parity::Even, Parity::Even}, {{1, 0}}, swap), DomainError);
}

TEST(Lefschetz, IdentityCobordismGivesOne) {
  const IntMatrix swap = {{0, 1}, {1, 0}};
  EXPECT_EQ(lefschetz_degree(GradedEndomorphismPair({Parity::Odd, Parity::Odd}, identity(2), swap)).value, 1);
  EXPECT_EQ(lefschetz_degree(GradedEndomorphismPair({}, {}, {})).value, 1);
}

TEST(Lefschetz, ExplicitMatrixModels) {
  for (std::size_t k = 1; k <= 8; ++k) {
    const auto even = lefschetz_degree(even_model(k));
    EXPECT_EQ(even.value, static_cast<std::int64_t>(4 * k + 1));
    EXPECT_EQ(even.method, DegreeMethod::LefschetzGeneral);
    const auto odd_pair = odd_model(k);
    std::int64_t trace = 0;
    for (std::size_t i = 0; i < odd_pair.j().size(); ++i) trace += odd_pair.j()[i][i];
    EXPECT_EQ(trace, -1);
    const auto odd = lefschetz_degree(odd_pair);
    EXPECT_EQ(odd.value, static_cast<std::int64_t>(4 * k - 1));
    EXPECT_EQ(odd.inputs.at("lefschetz"), -static_cast<std::int64_t>(2 * k));
  }
}

TEST(Montesinos, SmallBrieskornSpheres) {
  EXPECT_EQ(deg_brieskorn(2, 3, 5).value, 1);
  EXPECT_EQ(deg_brieskorn(2, 3, 7).value, 3);
  EXPECT_EQ(deg_brieskorn(2, 3, 13).value, 5);
  EXPECT_EQ(deg_brieskorn(2, 3, 7).method, DegreeMethod::MontesinosChi);
  EXPECT_EQ(deg_brieskorn(2, 3, 7).inputs.at("r"), 7);
  EXPECT_FALSE(deg_brieskorn(2, 5, 7).warnings.empty());
}

TEST(ClosedForm, Values) {
  EXPECT_EQ(deg_brieskorn_closed_form(1).value, 1);
  EXPECT_EQ(deg_brieskorn_closed_form(19).value, 7);
  EXPECT_EQ(deg_brieskorn_closed_form(25).value, 9);
  EXPECT_EQ(deg_brieskorn_closed_form(25).method, DegreeMethod::ClosedForm);
  EXPECT_THROW(deg_brieskorn_closed_form(9), DomainError);
  EXPECT_THROW(deg_brieskorn_closed_form(4), DomainError);
}

TEST(CrossMethod, PipelineMatrixAndClosedFormAgree) {
  for (std::int64_t r = 5; r <= 97; ++r) {
    if (std::gcd(r, std::int64_t{6}) != 1) continue;
    const BrieskornFloer f = brieskorn_floer(2, 3, r);
    const std::int64_t closed = deg_brieskorn_closed_form(r).value;
    EXPECT_EQ(deg_montesinos_mapping_torus(f.summary).value, closed) << r;
    EXPECT_EQ(lefschetz_degree(montesinos_pair(reduced_module(f.root))).value, closed) << r;
    EXPECT_EQ(closed % 2, 1);
  }
}

TEST(TorusKnots, DegreeIsOne) {
  for (std::int64_t p = 3; p <= 11; p += 2)
    for (std::int64_t q = p + 2; q <= 11; q += 2) {
      if (std::gcd(p, q) != 1) continue;
      const auto d = deg_torus_knot(p, q);
      EXPECT_EQ(d.value, 1);
      EXPECT_EQ(d.method, DegreeMethod::TorusKnot);
      EXPECT_FALSE(d.rationale.empty());
    }
  EXPECT_THROW(deg_torus_knot(2, 3), DomainError);
  EXPECT_THROW(deg_torus_knot(3, 9), DomainError);
}

TEST(Transfer, CongruenceRule) {
  const auto base = deg_brieskorn(2, 3, 7);
  EXPECT_EQ(deg_twist_roll_spin(base, 2, 0).value, 3);
  EXPECT_EQ(deg_twist_roll_spin(base, 6, 0).value, 3);
  EXPECT_EQ(deg_twist_roll_spin(base, 0, 1).value, 3);
  EXPECT_EQ(deg_twist_roll_spin(base, -2, 0).value, 3);
  EXPECT_EQ(deg_twist_roll_spin(base, 2, 0).method, DegreeMethod::Transfer);
  try {
    deg_twist_roll_spin(base, 4, 0);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("transfer rule inapplicable"), std::string::npos);
  }
  EXPECT_THROW(deg_twist_roll_spin(base, 1, 0), DomainError);
}

TEST(Obstruction, Verdicts) {
  EXPECT_EQ(lspace_obstruction(deg_twist_roll_spin(deg_brieskorn(2, 3, 7), 2, 0)),
            LSpaceVerdict::Obstructed);
  EXPECT_EQ(lspace_obstruction(deg_brieskorn(2, 3, 5)), LSpaceVerdict::Inconclusive);
  EXPECT_EQ(lspace_obstruction(deg_brieskorn_closed_form(25)), LSpaceVerdict::Obstructed);
  EXPECT_EQ(to_string(LSpaceVerdict::Obstructed), "OBSTRUCTED");
  EXPECT_EQ(to_string(DegreeMethod::MontesinosChi), "MONTESINOS_CHI");
}
