#include "twistspin/alexander.hpp"

#include <algorithm>
#include <utility>

#include "twistspin/error.hpp"

namespace twistspin {

GroupPresentation::GroupPresentation(std::vector<std::string> names,
                                     std::vector<FreeWord> relators,
                                     AbelianizationWeights weights,
                                     std::optional<FreeWord> longitude)
    : names_(std::move(names)),
      relators_(std::move(relators)),
      weights_(std::move(weights)),
      longitude_(std::move(longitude)) {
  const int m = generator_count();
  for (int g = 1; g <= m; ++g)
    if (!weights_.has(g))
      throw DomainError("missing weight for generator '" + names_[g - 1] + "'");
  for (std::size_t j = 0; j < relators_.size(); ++j) {
    if (relators_[j].max_generator() > m)
      throw DomainError("relator " + std::to_string(j + 1) +
                        " references an unknown generator");
    if (weights_.degree(relators_[j]) != 0)
      throw DomainError("relator " + std::to_string(j + 1) +
                        " has nonzero abelianized weight");
  }
  if (longitude_) {
    if (longitude_->max_generator() > m)
      throw DomainError("longitude references an unknown generator");
    if (weights_.degree(*longitude_) != 0)
      throw DomainError("longitude must have abelianized weight 0");
  }
}

AlexanderMatrix alexander_matrix(const GroupPresentation& p) {
  AlexanderMatrix mat;
  mat.columns = static_cast<std::size_t>(p.generator_count());
  mat.source = MatrixSource::Base;
  for (const auto& r : p.relators()) {
    std::vector<LaurentPolynomial> row;
    row.reserve(mat.columns);
    for (int i = 1; i <= p.generator_count(); ++i)
      row.push_back(abelianized_fox_derivative(i, r, p.weights()));
    mat.rows.push_back(std::move(row));
  }
  return mat;
}

GroupPresentation twist_roll_spin_presentation(const GroupPresentation& p,
                                               std::int64_t m, std::int64_t n) {
  if (!p.longitude())
    throw DomainError("twist-roll-spin needs a longitude word");
  if (p.generator_count() < 1)
    throw DomainError("twist-roll-spin needs at least one generator");
  const FreeWord w = FreeWord::generator(1).power(m) * p.longitude()->power(n);
  std::vector<FreeWord> relators = p.relators();
  for (int j = 1; j <= p.generator_count(); ++j)
    relators.push_back(commutator(w, FreeWord::generator(j)));
  return GroupPresentation(p.names(), std::move(relators), p.weights(), p.longitude());
}

AlexanderMatrix twist_roll_spin_matrix(const GroupPresentation& p, std::int64_t m,
                                       std::int64_t n) {
  if (!p.longitude())
    throw DomainError("twist-roll-spin needs a longitude word");
  AlexanderMatrix mat = alexander_matrix(p);
  mat.source = MatrixSource::TwistRoll;
  mat.twist_roll = {m, n};
  if (m < 0) {
    m = -m;
    n = -n;
  }
  const auto& wts = p.weights();
  const int count = p.generator_count();
  const std::int64_t e1 = wts.weight(1);
  const auto one = LaurentPolynomial::constant(1);

  LaurentPolynomial geometric;  // [d_1 x_1^m]
  for (std::int64_t k = 0; k < m; ++k)
    geometric += LaurentPolynomial::power_of_t(k * e1);
  const auto t_me1 = LaurentPolynomial::power_of_t(m * e1);

  std::vector<LaurentPolynomial> dw(static_cast<std::size_t>(count));
  for (int i = 1; i <= count; ++i) {
    LaurentPolynomial entry =
        (t_me1 * abelianized_fox_derivative(i, *p.longitude(), wts)).scaled(n);
    if (i == 1) entry += geometric;
    dw[static_cast<std::size_t>(i - 1)] = std::move(entry);
  }
  for (int j = 1; j <= count; ++j) {
    const auto conj = one - LaurentPolynomial::power_of_t(wts.weight(j));
    std::vector<LaurentPolynomial> row;
    row.reserve(static_cast<std::size_t>(count));
    for (int i = 1; i <= count; ++i) {
      LaurentPolynomial entry = conj * dw[static_cast<std::size_t>(i - 1)];
      if (i == j) entry += t_me1 - one;
      row.push_back(std::move(entry));
    }
    mat.rows.push_back(std::move(row));
  }
  return mat;
}

namespace {

std::int64_t span(const LaurentPolynomial& p) {
  return p.max_exponent() - p.min_exponent();
}

// Euclidean division in Q[T, T^-1] with the span as norm: a = q b + r,
// r = 0 or span(r) < span(b).
std::pair<LaurentPolynomial, LaurentPolynomial> euclid(const LaurentPolynomial& a,
                                                       const LaurentPolynomial& b) {
  if (a.is_zero()) return {LaurentPolynomial(Ring::Rat), LaurentPolynomial(Ring::Rat)};
  auto [q, r] = divide_rational(a, b);
  return {q.shifted(a.min_exponent() - b.min_exponent()), r.shifted(a.min_exponent())};
}

using Matrix = std::vector<std::vector<LaurentPolynomial>>;

// Diagonalizes a copy of the matrix by unimodular row and column operations
// over the Euclidean ring Q[T, T^-1] and returns the nonzero diagonal.
std::vector<LaurentPolynomial> diagonal_form(Matrix a, std::size_t cols) {
  const std::size_t rows = a.size();
  std::vector<LaurentPolynomial> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Pivot of minimal span.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (!a[i][j].is_zero() &&
            (pi == rows || span(a[i][j]) < span(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    std::swap(a[t], a[pi]);
    for (auto& row : a) std::swap(row[t], row[pj]);

    bool clear = false;
    while (!clear) {
      clear = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t].is_zero()) continue;
        const auto q = euclid(a[i][t], a[t][t]).first;
        for (std::size_t j = t; j < cols; ++j)
          if (!a[t][j].is_zero()) a[i][j] -= q * a[t][j];
        if (!a[i][t].is_zero()) {
          std::swap(a[t], a[i]);
          clear = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j].is_zero()) continue;
        const auto q = euclid(a[t][j], a[t][t]).first;
        for (std::size_t i = t; i < rows; ++i)
          if (!a[i][t].is_zero()) a[i][j] -= q * a[i][t];
        if (!a[t][j].is_zero()) {
          for (auto& row : a) std::swap(row[t], row[j]);
          clear = false;
        }
      }
    }
    diag.push_back(normalize_up_to_units(a[t][t]));
  }
  return diag;
}

}  // namespace

IdealGenerator first_elementary_ideal(const AlexanderMatrix& mat) {
  const std::size_t m = mat.columns;
  if (m == 0) throw DomainError("first elementary ideal needs at least one column");
  if (m == 1)
    return {LaurentPolynomial::constant(1, Ring::Rat), "M = 1: empty minor, unit ideal"};

  Matrix a;
  a.reserve(mat.rows.size());
  for (const auto& row : mat.rows) {
    if (row.size() != m) throw DomainError("ragged Alexander matrix");
    std::vector<LaurentPolynomial> r;
    r.reserve(m);
    for (const auto& e : row) r.push_back(e.to_rational());
    a.push_back(std::move(r));
  }
  std::vector<LaurentPolynomial> diag = diagonal_form(std::move(a), m);

  const std::string shape = std::to_string(mat.rows.size()) + "x" + std::to_string(m);
  if (diag.size() < m - 1)
    return {LaurentPolynomial(Ring::Rat),
            shape + " matrix of rank " + std::to_string(diag.size()) + ": zero ideal"};

  // Bring the diagonal into divisibility-chain form; the (M-1)-th
  // determinantal divisor is then the product of the first M-1 entries.
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      const auto g = gcd_rational(diag[i], diag[j]);
      const auto l = exact_quotient(diag[i] * diag[j], g);
      diag[i] = g;
      diag[j] = normalize_up_to_units(l);
    }
  LaurentPolynomial product = LaurentPolynomial::constant(1, Ring::Rat);
  for (std::size_t i = 0; i + 1 < m; ++i) product *= diag[i];
  return {normalize_up_to_units(product),
          shape + " matrix of rank " + std::to_string(diag.size())};
}

bool bounds_rational_homology_ball(const LaurentPolynomial& deltaK, std::int64_t m) {
  if (m == 0)
    throw DomainError(
        "m = 0 is a pure roll-spin; use the roll-spin obstruction instead");
  return !vanishes_at_mth_roots(deltaK, m < 0 ? -m : m);
}

bool obstruct_roll_spin(const GroupPresentation& p) {
  return !first_elementary_ideal(alexander_matrix(p)).is_unit();
}

InclusionReport ideal_inclusion_report(const GroupPresentation& p, std::int64_t m,
                                       std::int64_t n) {
  InclusionReport report;
  report.knot_delta = first_elementary_ideal(alexander_matrix(p)).generator;
  const std::int64_t abs_m = m < 0 ? -m : m;
  report.base_gcd = gcd_rational(report.knot_delta,
                                 LaurentPolynomial::t_power_minus_one(abs_m, Ring::Rat));
  report.spin_generator = first_elementary_ideal(twist_roll_spin_matrix(p, m, n)).generator;
  report.holds = divides_rational(report.base_gcd, report.spin_generator);
  return report;
}

bool check_ideal_inclusion(const GroupPresentation& p, std::int64_t m, std::int64_t n) {
  return ideal_inclusion_report(p, m, n).holds;
}

}  // namespace twistspin
