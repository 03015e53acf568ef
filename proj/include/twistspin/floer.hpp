#pragma once

// Combinatorial model of reduced monopole Floer homology for Brieskorn
// spheres: tau sequences, graded roots with the reflection involution, and
// the anti-invariant Euler characteristic.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace twistspin {

struct TauSequence {
  std::vector<std::int64_t> values;  // tau(0) = 0
  // Smallest s such that every increment after s is strictly positive.
  std::size_t stabilization_index = 0;
  // N with tau(n) = tau(N - n) on [0, N]; nullopt means no usable symmetry
  // and the involution falls back to the identity.
  std::optional<std::size_t> reflection_center;

  // Validates tau(0) = 0 and picks the largest palindromic prefix for which
  // the reflection is well defined on the graded root.
  static TauSequence from_values(std::vector<std::int64_t> values);

  bool stabilized() const;
};

// Tau function of Sigma(p, q, r) from representation counts over the
// semigroup <qr, pr, pq>:
//   tau(n + 1) - tau(n) = R(n) - R(N0 - n),  N0 = pqr - pq - qr - pr,
// iterated until `tail` consecutive strictly positive increments (default
// pqr). Requires pairwise coprime p, q, r >= 1.
TauSequence tau_sequence_brieskorn(std::int64_t p, std::int64_t q, std::int64_t r,
                                   std::optional<std::int64_t> tail = std::nullopt);

struct RootVertex {
  int id = 0;
  std::int64_t level = 0;    // tau value of the sublevel set
  std::int64_t grading = 0;  // -2 * level
  std::optional<int> parent;
  int involution_image = 0;
  std::size_t first = 0;  // index interval [first, last] of the component
  std::size_t last = 0;
};

class GradedRoot {
 public:
  explicit GradedRoot(std::vector<RootVertex> vertices);

  const std::vector<RootVertex>& vertices() const noexcept { return vertices_; }
  const RootVertex& root() const { return vertices_.front(); }
  std::vector<int> leaves() const;
  std::vector<int> children(int id) const;
  // Vertex ids at the given level, ordered by position.
  std::vector<int> level_vertices(std::int64_t level) const;
  std::int64_t min_level() const;
  std::int64_t max_level() const;

  // Order <= 2, fixes the root, preserves levels and parents.
  bool involution_is_automorphism() const;

 private:
  std::vector<RootVertex> vertices_;
};

// Vertices are the components of the sublevel sets {n : tau(n) <= l} on the
// stabilized window, from the minimum up to the first level where they have
// all merged (the root). Throws DomainError if the sequence is not stabilized.
GradedRoot graded_root(const TauSequence& t);

enum class Parity { Even, Odd };
enum class GradingTag { Even, Odd, Mixed };

std::string to_string(Parity p);
std::string to_string(GradingTag g);

// Reduced homology at one level with V >= 2 vertices: Z^V / <(1, ..., 1)>.
// The block is even when the involution fixes a vertex at that level.
struct LevelBlock {
  std::int64_t level = 0;
  std::int64_t grading = 0;
  int vertex_count = 0;
  int rank = 0;  // vertex_count - 1
  Parity parity = Parity::Even;
  int anti_invariant_dim = 0;  // number of swapped vertex pairs
  std::int64_t trace = 0;      // trace of the induced involution
};

struct FloerSummary {
  std::int64_t total_rank = 0;
  GradingTag z2_grading = GradingTag::Even;
  std::int64_t anti_invariant_euler = 0;
  std::vector<LevelBlock> blocks;
};

FloerSummary floer_summary(const GradedRoot& g);

// Concrete basis of the reduced module: per block, the vertex classes with
// one vertex dropped (a fixed one when available). j[row][col] is the
// matrix of the induced involution; column c is the image of basis vector c.
struct ReducedModule {
  std::vector<Parity> grading;
  std::vector<std::vector<std::int64_t>> j;

  std::size_t rank() const noexcept { return grading.size(); }
};

ReducedModule reduced_module(const GradedRoot& g);

struct BrieskornFloer {
  TauSequence tau;
  GradedRoot root;
  FloerSummary summary;
  std::vector<std::string> warnings;
};

// Full pipeline; warns that the involution is uncalibrated unless the triple
// is a permutation of (2, 3, r).
BrieskornFloer brieskorn_floer(std::int64_t p, std::int64_t q, std::int64_t r);

}  // namespace twistspin
