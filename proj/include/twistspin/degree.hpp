#pragma once

// |deg| of twist-roll-spun 2-knots from the graded Lefschetz formula
// |1 + 2 Tr(J (W - 1))|, its Montesinos and closed-form specializations, and
// the punctured L-space obstruction.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "twistspin/floer.hpp"

namespace twistspin {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// W and J on a Z/2-graded free module. Construction checks that both are
// square of the grading's size, preserve the parity blocks, and J^2 = I.
class GradedEndomorphismPair {
 public:
  GradedEndomorphismPair(std::vector<Parity> grading, IntMatrix w, IntMatrix j);

  const std::vector<Parity>& grading() const noexcept { return grading_; }
  const IntMatrix& w() const noexcept { return w_; }
  const IntMatrix& j() const noexcept { return j_; }

 private:
  std::vector<Parity> grading_;
  IntMatrix w_;
  IntMatrix j_;
};

// W = J on the reduced module of a graded root (Montesinos mapping tori).
GradedEndomorphismPair montesinos_pair(const ReducedModule& mod);

enum class DegreeMethod { LefschetzGeneral, MontesinosChi, ClosedForm, TorusKnot, Transfer };

std::string to_string(DegreeMethod m);

struct DegreeReport {
  std::int64_t value = 1;  // odd and nonnegative
  DegreeMethod method = DegreeMethod::LefschetzGeneral;
  std::map<std::string, std::int64_t> inputs;
  std::vector<std::string> warnings;
  std::string rationale;
};

// L = sum over generators of (-1)^parity (J (W - I))_ii; value |1 + 2L|.
DegreeReport lefschetz_degree(const GradedEndomorphismPair& g);

// |1 + 4 chi| with chi the anti-invariant Euler characteristic.
DegreeReport deg_montesinos_mapping_torus(const FloerSummary& s,
                                          std::vector<std::string> warnings = {});

// Graded-root pipeline for Sigma(p, q, r); inputs echo p, q, r.
DegreeReport deg_brieskorn(std::int64_t p, std::int64_t q, std::int64_t r);

// 4k + 1 for r = 12k + 1, 12k + 5 and 4k - 1 for r = 12k - 1, 12k - 5.
DegreeReport deg_brieskorn_closed_form(std::int64_t r);

// Twist-spun torus knot: W is the identity, so the value is 1. The involution
// is taken from the graded root of Sigma(2, p, q). Requires odd coprime p, q.
DegreeReport deg_torus_knot(std::int64_t p, std::int64_t q);

// Copies the base value; requires m + 2n = 2 (mod 4).
DegreeReport deg_twist_roll_spin(const DegreeReport& base, std::int64_t m, std::int64_t n);

enum class LSpaceVerdict { Obstructed, Inconclusive };

std::string to_string(LSpaceVerdict v);

// Obstructed iff |deg| != 1.
LSpaceVerdict lspace_obstruction(const DegreeReport& d);

}  // namespace twistspin
