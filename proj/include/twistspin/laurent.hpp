#pragma once

// Exact Laurent polynomials in one variable T over Z or Q.
//
// Coefficients are GMP rationals; an INT-tagged polynomial is guaranteed to
// have integral coefficients. The representation is canonical: a sparse map
// exponent -> coefficient with no zero entries, so operator== is equality of
// polynomials (not equality up to units, see equal_up_to_units).

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace twistspin {

enum class Ring { Int, Rat };

class LaurentPolynomial {
 public:
  using Exponent = std::int64_t;
  using Terms = std::map<Exponent, mpq_class>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(Ring ring) : ring_(ring) {}

  // Builds from (exponent, coefficient) pairs; repeated exponents add up.
  LaurentPolynomial(Ring ring,
                    std::initializer_list<std::pair<Exponent, long>> terms);

  static LaurentPolynomial constant(const mpq_class& c, Ring ring = Ring::Int);
  static LaurentPolynomial monomial(const mpq_class& c, Exponent e,
                                    Ring ring = Ring::Int);
  // T^e with unit coefficient.
  static LaurentPolynomial power_of_t(Exponent e, Ring ring = Ring::Int);
  // T^m - 1
  static LaurentPolynomial t_power_minus_one(Exponent m, Ring ring = Ring::Int);

  Ring ring() const noexcept { return ring_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  // Precondition for the next three: !is_zero().
  Exponent min_exponent() const;
  Exponent max_exponent() const;
  const mpq_class& leading_coefficient() const;

  mpq_class coefficient(Exponent e) const;

  // Explicit ring conversions. to_integer throws DomainError if a coefficient
  // is not integral.
  LaurentPolynomial to_rational() const;
  LaurentPolynomial to_integer() const;
  LaurentPolynomial with_ring(Ring ring) const;

  // Multiplication by T^k.
  LaurentPolynomial shifted(Exponent k) const;
  // T -> T^{-1}
  LaurentPolynomial reflected() const;
  // T -> T^k
  LaurentPolynomial substituted_power(Exponent k) const;

  mpq_class evaluate(const mpq_class& t) const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);

  friend LaurentPolynomial operator+(LaurentPolynomial a,
                                     const LaurentPolynomial& b) {
    return a += b;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial a,
                                     const LaurentPolynomial& b) {
    return a -= b;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a,
                                     const LaurentPolynomial& b);

  // Scalar multiplication keeps the ring tag; a non-integral scalar on an INT
  // polynomial throws.
  LaurentPolynomial scaled(const mpq_class& c) const;

  // Canonical-form equality, ring tags included.
  friend bool operator==(const LaurentPolynomial& a,
                         const LaurentPolynomial& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  // Text form: `3*T^-2 + 1 - T^5`, ascending exponents.
  std::string to_string() const;

 private:
  void add_term(Exponent e, const mpq_class& c);
  void check_compatible(const LaurentPolynomial& other) const;

  Ring ring_ = Ring::Int;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p);

enum class ArithKind { Add, Sub, Mul };

// Ring arithmetic; throws DomainError on mixed ring tags.
LaurentPolynomial arith(const LaurentPolynomial& a, const LaurentPolynomial& b,
                        ArithKind kind);

// The unique associate with lowest exponent 0 and positive leading
// coefficient. Over Z the integer content is kept; over Q the result is the
// primitive integral associate (content 1), still tagged RAT.
LaurentPolynomial normalize_up_to_units(const LaurentPolynomial& p);

// a and b differ by a unit of the ring (+-T^k over Z, c*T^k over Q). Mixed
// tags compare over Q.
bool equal_up_to_units(const LaurentPolynomial& a, const LaurentPolynomial& b);

// Normalized generator of the ideal (a, b) of Q[T, T^-1].
LaurentPolynomial gcd_rational(const LaurentPolynomial& a,
                               const LaurentPolynomial& b);

// Nonzero monomial.
bool is_unit_rational(const LaurentPolynomial& p);

// b divides a in Q[T, T^-1]. Division by zero only "divides" zero.
bool divides_rational(const LaurentPolynomial& b, const LaurentPolynomial& a);

// Quotient and remainder of polynomial division in Q[T] after both operands
// are shifted to lowest exponent 0 (divisor nonzero). The remainder is zero
// exactly when divides_rational(b, a).
struct DivisionResult {
  LaurentPolynomial quotient;
  LaurentPolynomial remainder;
};
DivisionResult divide_rational(const LaurentPolynomial& a,
                               const LaurentPolynomial& b);

// Exact quotient a / b in Q[T, T^-1]; throws DomainError if b does not divide.
LaurentPolynomial exact_quotient(const LaurentPolynomial& a,
                                 const LaurentPolynomial& b);

// True iff p has a zero at some m-th root of unity. m must be >= 1.
bool vanishes_at_mth_roots(const LaurentPolynomial& p, std::int64_t m);

// Parses the text form. Without an explicit ring the result is INT when all
// coefficients are integers and RAT otherwise.
LaurentPolynomial parse_laurent(std::string_view text);
LaurentPolynomial parse_laurent(std::string_view text, Ring ring);

}  // namespace twistspin
