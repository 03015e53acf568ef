#pragma once

// Free groups, their integral group rings, and Fox free differential calculus.
//
// Generators are positive indices 1..M. Printable names live with the
// presentation (see alexander.hpp); the algebra here never looks at them
// except in the text helpers at the bottom.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "twistspin/laurent.hpp"

namespace twistspin {

struct Letter {
  int generator = 1;  // >= 1
  int sign = 1;       // +1 or -1

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// A freely reduced word. Every constructor reduces.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<Letter> letters);

  static FreeWord generator(int index, int sign = 1);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }
  int max_generator() const noexcept;

  FreeWord inverse() const;
  // Negative k is the |k|-th power of the inverse.
  FreeWord power(std::int64_t k) const;

  friend FreeWord operator*(const FreeWord& u, const FreeWord& v);
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<Letter> letters_;
};

// u v u^-1 v^-1
FreeWord commutator(const FreeWord& u, const FreeWord& v);

// Finite Z-linear combination of free-group elements.
class GroupRingElement {
 public:
  using Coeff = std::int64_t;
  using Terms = std::map<FreeWord, Coeff>;

  GroupRingElement() = default;
  GroupRingElement(const FreeWord& w, Coeff c = 1);  // NOLINT: implicit lift

  static GroupRingElement zero() { return {}; }
  static GroupRingElement one() { return GroupRingElement(FreeWord{}); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(const FreeWord& w, Coeff c);

  GroupRingElement operator-() const;
  GroupRingElement& operator+=(const GroupRingElement& other);
  GroupRingElement& operator-=(const GroupRingElement& other);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) {
    return a += b;
  }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) {
    return a -= b;
  }
  friend GroupRingElement operator*(const GroupRingElement& a,
                                    const GroupRingElement& b);
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  Terms terms_;
};

// Fox derivative with respect to generator i (linear extension to ZF).
GroupRingElement fox_derivative(int i, const FreeWord& w);
GroupRingElement fox_derivative(int i, const GroupRingElement& g);

// Exponent-sum map ZF -> Z[T, T^-1], x_i |-> T^{e_i}.
class AbelianizationWeights {
 public:
  AbelianizationWeights() = default;
  explicit AbelianizationWeights(std::map<int, std::int64_t> weights);
  // All generators 1..count weighted 1 (Wirtinger presentations).
  static AbelianizationWeights uniform(int count, std::int64_t weight = 1);

  bool has(int generator) const { return weights_.count(generator) != 0; }
  // Throws DomainError for an unweighted generator.
  std::int64_t weight(int generator) const;
  const std::map<int, std::int64_t>& weights() const noexcept { return weights_; }
  bool all_equal_to(std::int64_t w) const;

  // Total weight of a word (its exponent in the image T^k).
  std::int64_t degree(const FreeWord& w) const;

  friend bool operator==(const AbelianizationWeights&,
                         const AbelianizationWeights&) = default;

 private:
  std::map<int, std::int64_t> weights_;
};

LaurentPolynomial abelianize(const FreeWord& w, const AbelianizationWeights& wts);
LaurentPolynomial abelianize(const GroupRingElement& g,
                             const AbelianizationWeights& wts);

// [d_i w], computed directly without materializing d_i w in ZF. Equal to
// abelianize(fox_derivative(i, w), wts).
LaurentPolynomial abelianized_fox_derivative(int i, const FreeWord& w,
                                             const AbelianizationWeights& wts);

// Word text form. Tokens are separated by whitespace; a token is a generator
// name, its upper-case spelling for the inverse, or either with an integer
// exponent suffix `^k`. `1` denotes the identity. With an empty name table the
// indexed form `x1 x2^-1` is accepted. Throws ParseError (line 1).
FreeWord parse_word(std::string_view text, const std::vector<std::string>& names);

// Inverse of parse_word for names that are lower-case; other names fall back
// to `name^-1`. The identity prints as `1`.
std::string format_word(const FreeWord& w, const std::vector<std::string>& names);

}  // namespace twistspin
