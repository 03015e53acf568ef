#include "twistspin/laurent.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <vector>

#include "twistspin/error.hpp"

namespace twistspin {

namespace {

bool is_integral(const mpq_class& c) { return c.get_den() == 1; }

// Dense polynomial in Q[T], index = degree, no trailing zeros. The zero
// polynomial is the empty vector.
using Dense = std::vector<mpq_class>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Dense& p) { return static_cast<int>(p.size()) - 1; }

// Shift to lowest exponent 0 and densify.
Dense to_dense(const LaurentPolynomial& p) {
  Dense out;
  if (p.is_zero()) return out;
  const auto lo = p.min_exponent();
  out.resize(static_cast<std::size_t>(p.max_exponent() - lo + 1));
  for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e - lo)] = c;
  return out;
}

LaurentPolynomial from_dense(const Dense& p, Ring ring) {
  LaurentPolynomial out(Ring::Rat);
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0)
      out += LaurentPolynomial::monomial(p[i], static_cast<std::int64_t>(i),
                                         Ring::Rat);
  return out.with_ring(ring);
}

// Long division in Q[T]; divisor must be nonzero.
void divmod(const Dense& a, const Dense& b, Dense& quotient, Dense& remainder) {
  remainder = a;
  quotient.clear();
  trim(remainder);
  if (degree(remainder) < degree(b)) return;
  quotient.assign(static_cast<std::size_t>(degree(remainder) - degree(b) + 1), 0);
  const mpq_class lead = b.back();
  while (!remainder.empty() && degree(remainder) >= degree(b)) {
    const int shift = degree(remainder) - degree(b);
    const mpq_class factor = remainder.back() / lead;
    quotient[static_cast<std::size_t>(shift)] = factor;
    for (std::size_t i = 0; i < b.size(); ++i)
      remainder[i + static_cast<std::size_t>(shift)] -= factor * b[i];
    remainder.pop_back();  // leading term cancels exactly
    trim(remainder);
  }
}

void make_monic(Dense& p) {
  if (p.empty()) return;
  const mpq_class lead = p.back();
  for (auto& c : p) c /= lead;
}

Dense dense_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  Dense q, r;
  while (!b.empty()) {
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
    make_monic(b);
  }
  make_monic(a);
  return a;
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(
    Ring ring, std::initializer_list<std::pair<Exponent, long>> terms)
    : ring_(ring) {
  for (const auto& [e, c] : terms) add_term(e, mpq_class(c));
}

LaurentPolynomial LaurentPolynomial::constant(const mpq_class& c, Ring ring) {
  return monomial(c, 0, ring);
}

LaurentPolynomial LaurentPolynomial::monomial(const mpq_class& c, Exponent e,
                                              Ring ring) {
  if (ring == Ring::Int && !is_integral(c))
    throw DomainError("non-integral coefficient in an INT polynomial");
  LaurentPolynomial p(ring);
  p.add_term(e, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::power_of_t(Exponent e, Ring ring) {
  return monomial(1, e, ring);
}

LaurentPolynomial LaurentPolynomial::t_power_minus_one(Exponent m, Ring ring) {
  return power_of_t(m, ring) - constant(1, ring);
}

LaurentPolynomial::Exponent LaurentPolynomial::min_exponent() const {
  if (terms_.empty()) throw DomainError("min_exponent of the zero polynomial");
  return terms_.begin()->first;
}

LaurentPolynomial::Exponent LaurentPolynomial::max_exponent() const {
  if (terms_.empty()) throw DomainError("max_exponent of the zero polynomial");
  return terms_.rbegin()->first;
}

const mpq_class& LaurentPolynomial::leading_coefficient() const {
  if (terms_.empty())
    throw DomainError("leading coefficient of the zero polynomial");
  return terms_.rbegin()->second;
}

mpq_class LaurentPolynomial::coefficient(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

LaurentPolynomial LaurentPolynomial::to_rational() const {
  LaurentPolynomial out = *this;
  out.ring_ = Ring::Rat;
  return out;
}

LaurentPolynomial LaurentPolynomial::to_integer() const {
  for (const auto& [e, c] : terms_)
    if (!is_integral(c))
      throw DomainError("polynomial has a non-integral coefficient");
  LaurentPolynomial out = *this;
  out.ring_ = Ring::Int;
  return out;
}

LaurentPolynomial LaurentPolynomial::with_ring(Ring ring) const {
  return ring == Ring::Int ? to_integer() : to_rational();
}

LaurentPolynomial LaurentPolynomial::shifted(Exponent k) const {
  LaurentPolynomial out(ring_);
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::reflected() const {
  LaurentPolynomial out(ring_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::substituted_power(Exponent k) const {
  LaurentPolynomial out(ring_);
  for (const auto& [e, c] : terms_) out.add_term(e * k, c);
  return out;
}

mpq_class LaurentPolynomial::evaluate(const mpq_class& t) const {
  if (t == 0 && !terms_.empty() && terms_.begin()->first < 0)
    throw DomainError("evaluating a negative power of T at 0");
  mpq_class sum = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class power = 1;
    const mpq_class base = e < 0 ? mpq_class(1 / t) : t;
    for (Exponent i = 0; i < (e < 0 ? -e : e); ++i) power *= base;
    sum += c * power;
  }
  return sum;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

void LaurentPolynomial::check_compatible(const LaurentPolynomial& other) const {
  if (ring_ != other.ring_)
    throw DomainError("mixed ring tags (INT vs RAT) without explicit promotion");
}

void LaurentPolynomial::add_term(Exponent e, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a,
                            const LaurentPolynomial& b) {
  a.check_compatible(b);
  LaurentPolynomial out(a.ring_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
  *this = *this * other;
  return *this;
}

LaurentPolynomial LaurentPolynomial::scaled(const mpq_class& c) const {
  if (ring_ == Ring::Int && !is_integral(c))
    throw DomainError("non-integral scalar applied to an INT polynomial");
  LaurentPolynomial out(ring_);
  if (c == 0) return out;
  out.terms_ = terms_;
  for (auto& [e, coeff] : out.terms_) coeff *= c;
  return out;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const mpq_class magnitude = abs(c);
    if (e == 0) {
      os << magnitude.get_str();
      continue;
    }
    if (magnitude != 1) os << magnitude.get_str() << '*';
    os << 'T';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) {
  return os << p.to_string();
}

LaurentPolynomial arith(const LaurentPolynomial& a, const LaurentPolynomial& b,
                        ArithKind kind) {
  switch (kind) {
    case ArithKind::Add:
      return a + b;
    case ArithKind::Sub:
      return a - b;
    case ArithKind::Mul:
      return a * b;
  }
  throw DomainError("unknown arithmetic kind");
}

LaurentPolynomial normalize_up_to_units(const LaurentPolynomial& p) {
  if (p.is_zero()) return p;
  LaurentPolynomial out = p.shifted(-p.min_exponent());
  if (p.ring() == Ring::Int) {
    return out.leading_coefficient() < 0 ? -out : out;
  }
  // Primitive integral associate: clear denominators, divide by content.
  mpz_class den_lcm = 1;
  for (const auto& [e, c] : out.terms()) den_lcm = lcm(den_lcm, c.get_den());
  mpz_class num_gcd = 0;
  for (const auto& [e, c] : out.terms())
    num_gcd = gcd(num_gcd, mpz_class(c.get_num() * (den_lcm / c.get_den())));
  mpq_class factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (out.leading_coefficient() < 0) factor = -factor;
  return out.scaled(factor);
}

bool equal_up_to_units(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.ring() == Ring::Int && b.ring() == Ring::Int)
    return normalize_up_to_units(a) == normalize_up_to_units(b);
  return normalize_up_to_units(a.to_rational()) ==
         normalize_up_to_units(b.to_rational());
}

LaurentPolynomial gcd_rational(const LaurentPolynomial& a,
                               const LaurentPolynomial& b) {
  const Dense g = dense_gcd(to_dense(a), to_dense(b));
  return normalize_up_to_units(from_dense(g, Ring::Rat));
}

bool is_unit_rational(const LaurentPolynomial& p) {
  return p.term_count() == 1;
}

DivisionResult divide_rational(const LaurentPolynomial& a,
                               const LaurentPolynomial& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  Dense q, r;
  divmod(to_dense(a), to_dense(b), q, r);
  return {from_dense(q, Ring::Rat), from_dense(r, Ring::Rat)};
}

bool divides_rational(const LaurentPolynomial& b, const LaurentPolynomial& a) {
  if (b.is_zero()) return a.is_zero();
  return divide_rational(a, b).remainder.is_zero();
}

LaurentPolynomial exact_quotient(const LaurentPolynomial& a,
                                 const LaurentPolynomial& b) {
  auto [q, r] = divide_rational(a, b);
  if (!r.is_zero()) throw DomainError("exact_quotient: divisor does not divide");
  // Undo the shifts applied by divide_rational.
  const auto shift = a.is_zero() ? 0 : a.min_exponent() - b.min_exponent();
  return q.shifted(shift);
}

bool vanishes_at_mth_roots(const LaurentPolynomial& p, std::int64_t m) {
  if (m < 1) throw DomainError("vanishes_at_mth_roots requires m >= 1");
  const auto g = gcd_rational(p, LaurentPolynomial::t_power_minus_one(m, Ring::Rat));
  return !is_unit_rational(g);
}

// ---------------------------------------------------------------------------
// Text form

namespace {

class LaurentParser {
 public:
  explicit LaurentParser(std::string_view text) : text_(text) {}

  LaurentPolynomial parse() {
    LaurentPolynomial out(Ring::Rat);
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
      skip_ws();
    }
    out += term(negative);
    while (true) {
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
      skip_ws();
      out += term(negative);
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(1, pos_ + 1, msg);
  }

  mpz_class natural() {
    const auto start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  LaurentPolynomial term(bool negative) {
    mpq_class coeff = 1;
    bool has_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      has_coeff = true;
      mpz_class num = natural();
      mpz_class den = 1;
      if (!at_end() && peek() == '/') {
        ++pos_;
        den = natural();
        if (den == 0) fail("zero denominator");
      }
      coeff = mpq_class(num, den);
      coeff.canonicalize();
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || peek() != 'T') fail("expected 'T' after '*'");
      }
    }
    std::int64_t exponent = 0;
    if (!at_end() && peek() == 'T') {
      ++pos_;
      exponent = 1;
      if (!at_end() && peek() == '^') {
        ++pos_;
        bool neg_exp = false;
        if (!at_end() && (peek() == '-' || peek() == '+')) {
          neg_exp = peek() == '-';
          ++pos_;
        }
        const mpz_class e = natural();
        if (!e.fits_slong_p()) fail("exponent out of range");
        exponent = neg_exp ? -e.get_si() : e.get_si();
      }
    } else if (!has_coeff) {
      fail("expected a coefficient or 'T'");
    }
    return LaurentPolynomial::monomial(negative ? mpq_class(-coeff) : coeff,
                                       exponent, Ring::Rat);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPolynomial parse_laurent(std::string_view text) {
  LaurentPolynomial p = LaurentParser(text).parse();
  for (const auto& [e, c] : p.terms())
    if (!is_integral(c)) return p;
  return p.to_integer();
}

LaurentPolynomial parse_laurent(std::string_view text, Ring ring) {
  LaurentPolynomial p = LaurentParser(text).parse();
  if (ring == Ring::Int) return p.to_integer();
  return p;
}

}  // namespace twistspin
