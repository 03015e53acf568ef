#pragma once

// Input constructors: the presentation file format, braid closures, and torus
// knots.

#include <cstdint>
#include <string_view>
#include <vector>

#include "twistspin/alexander.hpp"

namespace twistspin {

// Presentation file format (line oriented, `#` starts a comment):
//
//   gens: a b c
//   weights: a=1 b=1 c=1
//   rel: a b A C
//   rel: b c B A
//   longitude: c a B A        (optional; empty or `1` is the identity)
//
// Throws ParseError with line/column for syntax errors and for duplicate
// names, unknown letters, missing weights, empty relators and a longitude of
// nonzero weight.
GroupPresentation parse_presentation(std::string_view text);

// Braid word in B_n; letters are signed generator indices (+i for sigma_i,
// -i for its inverse), 1 <= |i| <= strand_count - 1.
struct BraidWord {
  int strand_count = 2;
  std::vector<int> letters;

  int writhe() const;
  // Strand permutation of the closure: position k at the top ends at
  // position permutation()[k] at the bottom (0-based).
  std::vector<int> permutation() const;
  bool closes_to_knot() const;
};

// `B3: s1 s2^-1 s1 s2^-1`; `sK^e` repeats sigma_K^{sign e} |e| times.
BraidWord parse_braid(std::string_view text);

// Wirtinger presentation of the braid closure with unit weights, generator
// names x1..xM (x1 = top arc of strand 1) and a longitude of weight 0: the
// product of the conjugating over-arc letters met along the closure of strand
// 1, multiplied by x1^{-writhe}. Throws DomainError if the closure is a link.
GroupPresentation braid_to_presentation(const BraidWord& b);

// (sigma_1 ... sigma_{p-1})^q in B_p.
BraidWord torus_knot_braid(int p, int q);

struct TorusKnot {
  GroupPresentation presentation;  // <u, v | u^p v^-q>, u -> T^q, v -> T^p
  LaurentPolynomial alexander;     // (T^{pq}-1)(T-1) / ((T^p-1)(T^q-1))
};

// Requires p, q >= 2 and gcd(p, q) = 1.
TorusKnot torus_knot(int p, int q);

}  // namespace twistspin
