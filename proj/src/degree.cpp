#include "twistspin/degree.hpp"

#include <numeric>
#include <stdexcept>

#include "twistspin/error.hpp"

namespace twistspin {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw DomainError("integer overflow in trace");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw DomainError("integer overflow in trace");
  return out;
}

void check_square(const IntMatrix& m, std::size_t n, const char* name) {
  if (m.size() != n) throw DomainError(std::string(name) + " must be " + std::to_string(n) + "x" +
                                       std::to_string(n));
  for (const auto& row : m)
    if (row.size() != n) throw DomainError(std::string(name) + " is not square");
}

void check_blocks(const IntMatrix& m, const std::vector<Parity>& grading, const char* name) {
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c)
      if (m[r][c] != 0 && grading[r] != grading[c])
        throw DomainError(std::string(name) + " mixes the parity blocks");
}

// |1 + 2L|, with the oddness invariant asserted.
std::int64_t degree_value(std::int64_t lefschetz) {
  const std::int64_t v = checked_add(1, checked_mul(2, lefschetz));
  const std::int64_t value = v < 0 ? -v : v;
  if (value % 2 != 1) throw std::logic_error("|deg| must be odd");
  return value;
}

void require_coprime_to_6(std::int64_t r) {
  if (r < 1) throw DomainError("r must be positive");
  if (std::gcd(r, std::int64_t{6}) != 1) throw DomainError("r must be coprime to 6");
}

}  // namespace

GradedEndomorphismPair::GradedEndomorphismPair(std::vector<Parity> grading, IntMatrix w,
                                               IntMatrix j)
    : grading_(std::move(grading)), w_(std::move(w)), j_(std::move(j)) {
  const std::size_t n = grading_.size();
  check_square(w_, n, "W");
  check_square(j_, n, "J");
  check_blocks(w_, grading_, "W");
  check_blocks(j_, grading_, "J");
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      std::int64_t entry = 0;
      for (std::size_t k = 0; k < n; ++k) entry = checked_add(entry, checked_mul(j_[r][k], j_[k][c]));
      if (entry != (r == c ? 1 : 0)) throw DomainError("J must be an involution (J^2 = I)");
    }
}

GradedEndomorphismPair montesinos_pair(const ReducedModule& mod) {
  return GradedEndomorphismPair(mod.grading, mod.j, mod.j);
}

std::string to_string(DegreeMethod m) {
  switch (m) {
    case DegreeMethod::LefschetzGeneral: return "LEFSCHETZ_GENERAL";
    case DegreeMethod::MontesinosChi: return "MONTESINOS_CHI";
    case DegreeMethod::ClosedForm: return "CLOSED_FORM";
    case DegreeMethod::TorusKnot: return "TORUS_KNOT";
    case DegreeMethod::Transfer: return "TRANSFER";
  }
  return "?";
}

std::string to_string(LSpaceVerdict v) {
  return v == LSpaceVerdict::Obstructed ? "OBSTRUCTED" : "INCONCLUSIVE";
}

DegreeReport lefschetz_degree(const GradedEndomorphismPair& g) {
  const auto& w = g.w();
  const auto& j = g.j();
  const std::size_t n = g.grading().size();
  std::int64_t lefschetz = 0;
  for (std::size_t i = 0; i < n; ++i) {
    // (J (W - I))_ii = sum_k J_ik W_ki - J_ii
    std::int64_t diag = -j[i][i];
    for (std::size_t k = 0; k < n; ++k) diag = checked_add(diag, checked_mul(j[i][k], w[k][i]));
    lefschetz = checked_add(lefschetz, g.grading()[i] == Parity::Even ? diag : -diag);
  }
  DegreeReport report;
  report.value = degree_value(lefschetz);
  report.method = DegreeMethod::LefschetzGeneral;
  report.inputs = {{"rank", static_cast<std::int64_t>(n)}, {"lefschetz", lefschetz}};
  return report;
}

DegreeReport deg_montesinos_mapping_torus(const FloerSummary& s,
                                          std::vector<std::string> warnings) {
  DegreeReport report;
  report.value = degree_value(checked_mul(2, s.anti_invariant_euler));
  report.method = DegreeMethod::MontesinosChi;
  report.inputs = {{"rank", s.total_rank}, {"chi", s.anti_invariant_euler}};
  report.warnings = std::move(warnings);
  return report;
}

DegreeReport deg_brieskorn(std::int64_t p, std::int64_t q, std::int64_t r) {
  const BrieskornFloer floer = brieskorn_floer(p, q, r);
  DegreeReport report = deg_montesinos_mapping_torus(floer.summary, floer.warnings);
  report.inputs = {{"p", p}, {"q", q}, {"r", r}};
  return report;
}

DegreeReport deg_brieskorn_closed_form(std::int64_t r) {
  require_coprime_to_6(r);
  const std::int64_t residue = r % 12;
  DegreeReport report;
  if (residue == 1 || residue == 5) {
    report.value = 4 * (r / 12) + 1;
  } else {
    report.value = 4 * ((r + 5) / 12) - 1;
  }
  report.method = DegreeMethod::ClosedForm;
  report.inputs = {{"p", 2}, {"q", 3}, {"r", r}};
  return report;
}

DegreeReport deg_torus_knot(std::int64_t p, std::int64_t q) {
  if (p < 3 || q < 3 || p % 2 == 0 || q % 2 == 0)
    throw DomainError("torus knot degree needs odd p, q >= 3");
  if (std::gcd(p, q) != 1) throw DomainError("torus knot degree needs coprime p, q");
  const ReducedModule mod = reduced_module(brieskorn_floer(2, p, q).root);
  IntMatrix identity(mod.rank(), std::vector<std::int64_t>(mod.rank(), 0));
  for (std::size_t i = 0; i < mod.rank(); ++i) identity[i][i] = 1;
  DegreeReport report = lefschetz_degree(GradedEndomorphismPair(mod.grading, identity, mod.j));
  report.method = DegreeMethod::TorusKnot;
  report.inputs = {{"p", p}, {"q", q}};
  report.rationale = "W_* is the identity for twist-spun torus knots, so J(W_* - 1) = 0";
  return report;
}

DegreeReport deg_twist_roll_spin(const DegreeReport& base, std::int64_t m, std::int64_t n) {
  const std::int64_t s = checked_add(m, checked_mul(2, n));
  if (((s % 4) + 4) % 4 != 2)
    throw DomainError("transfer rule inapplicable: m + 2n = " + std::to_string(s) +
                      " is not 2 mod 4");
  DegreeReport report = base;
  report.method = DegreeMethod::Transfer;
  report.inputs["m"] = m;
  report.inputs["n"] = n;
  return report;
}

LSpaceVerdict lspace_obstruction(const DegreeReport& d) {
  return d.value != 1 ? LSpaceVerdict::Obstructed : LSpaceVerdict::Inconclusive;
}

}  // namespace twistspin
