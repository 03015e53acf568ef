#pragma once

// Alexander matrices, first elementary ideals, and the twist-roll-spin
// construction on group presentations.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twistspin/fox.hpp"
#include "twistspin/laurent.hpp"

namespace twistspin {

// A finite presentation <x_1..x_M | r_1..r_N> together with the abelianization
// weights and, optionally, a longitude word. Construction validates:
//   - relators only use generators 1..M,
//   - every generator is weighted and every relator has total weight 0,
//   - the longitude, if any, has total weight 0.
class GroupPresentation {
 public:
  GroupPresentation(std::vector<std::string> names, std::vector<FreeWord> relators,
                    AbelianizationWeights weights,
                    std::optional<FreeWord> longitude = std::nullopt);

  int generator_count() const noexcept { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<FreeWord>& relators() const noexcept { return relators_; }
  const AbelianizationWeights& weights() const noexcept { return weights_; }
  const std::optional<FreeWord>& longitude() const noexcept { return longitude_; }

  // Wirtinger-style: every generator has weight 1.
  bool has_unit_weights() const { return weights_.all_equal_to(1); }

 private:
  std::vector<std::string> names_;
  std::vector<FreeWord> relators_;
  AbelianizationWeights weights_;
  std::optional<FreeWord> longitude_;
};

struct TwistRollTag {
  std::int64_t m = 0;
  std::int64_t n = 0;
};

enum class MatrixSource { Base, TwistRoll, Reduced };

// Row-major matrix over Z[T, T^-1] with a fixed column count (rows may be 0).
struct AlexanderMatrix {
  std::size_t columns = 0;
  std::vector<std::vector<LaurentPolynomial>> rows;
  MatrixSource source = MatrixSource::Base;
  TwistRollTag twist_roll;  // meaningful for MatrixSource::TwistRoll

  std::size_t row_count() const noexcept { return rows.size(); }
  const LaurentPolynomial& at(std::size_t r, std::size_t c) const { return rows[r][c]; }
};

// Normalized generator of the first elementary ideal over Q[T, T^-1].
struct IdealGenerator {
  LaurentPolynomial generator;
  std::string note;

  bool is_unit() const { return is_unit_rational(generator); }
};

// Jacobian [d_i r_j]; tagged Base.
AlexanderMatrix alexander_matrix(const GroupPresentation& p);

// Appends [x_1^m lambda^n, x_j] for j = 1..M. Requires a longitude.
GroupPresentation twist_roll_spin_presentation(const GroupPresentation& p,
                                               std::int64_t m, std::int64_t n);

// The closed-form Alexander matrix of the twist-roll-spin: the base Jacobian
// stacked over M commutator rows with entries
//   (1 - T^{e_j}) [d_i w] + delta_ij (T^{m e_1} - 1),
//   [d_i w] = delta_i1 (1 + T^{e_1} + ... + T^{(m-1) e_1}) + n T^{m e_1} [d_i lambda].
// For unit weights this is (delta_ij - delta_i1)(T^m - 1) + n T^m (1 - T)[d_i lambda].
// Negative m is normalized to (-m, -n), which defines the same group.
AlexanderMatrix twist_roll_spin_matrix(const GroupPresentation& p, std::int64_t m,
                                       std::int64_t n);

// gcd over Q[T, T^-1] of the (M-1)x(M-1) minors, read off from the
// invariant factors of the matrix over Q[T]. M = 1 gives the unit ideal.
IdealGenerator first_elementary_ideal(const AlexanderMatrix& mat);

// Criterion for the twist-roll-spin with m != 0: the fiber is a rational
// homology ball iff deltaK has no zero at an |m|-th root of unity.
bool bounds_rational_homology_ball(const LaurentPolynomial& deltaK, std::int64_t m);

// Roll-spins (m = 0): obstructed from bounding a rational homology ball iff
// the Alexander polynomial of the base knot is not a unit.
bool obstruct_roll_spin(const GroupPresentation& p);

struct InclusionReport {
  LaurentPolynomial knot_delta;      // generator of Delta(K)
  LaurentPolynomial base_gcd;        // generator of (Delta_K, T^m - 1)
  LaurentPolynomial spin_generator;  // generator of Delta(twist-roll-spin)
  bool holds = false;                // base_gcd divides spin_generator
};

InclusionReport ideal_inclusion_report(const GroupPresentation& p, std::int64_t m,
                                       std::int64_t n);
bool check_ideal_inclusion(const GroupPresentation& p, std::int64_t m, std::int64_t n);

}  // namespace twistspin
