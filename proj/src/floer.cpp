#include "twistspin/floer.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "twistspin/error.hpp"

namespace twistspin {

namespace {

using Runs = std::vector<std::pair<std::size_t, std::size_t>>;

// Maximal runs of indices in [0, end] with tau <= level.
Runs sublevel_runs(const std::vector<std::int64_t>& tau, std::size_t end, std::int64_t level) {
  Runs runs;
  bool inside = false;
  for (std::size_t n = 0; n <= end; ++n) {
    if (tau[n] <= level) {
      if (!inside) runs.emplace_back(n, n);
      runs.back().second = n;
      inside = true;
    } else {
      inside = false;
    }
  }
  return runs;
}

std::size_t run_containing(const Runs& runs, std::size_t n) {
  auto it = std::upper_bound(runs.begin(), runs.end(), n,
                             [](std::size_t x, const auto& run) { return x < run.first; });
  if (it == runs.begin() || std::prev(it)->second < n) return runs.size();
  return static_cast<std::size_t>(std::prev(it) - runs.begin());
}

bool palindromic(const std::vector<std::int64_t>& tau, std::size_t center) {
  for (std::size_t n = 0; 2 * n < center; ++n)
    if (tau[n] != tau[center - n]) return false;
  return true;
}

std::pair<std::int64_t, std::int64_t> window_levels(const std::vector<std::int64_t>& tau,
                                                    std::size_t end) {
  const auto [lo, hi] = std::minmax_element(tau.begin(), tau.begin() + static_cast<long>(end) + 1);
  return {*lo, *hi};
}

// Largest component start over all levels; the reflection center must reach it.
std::size_t latest_component_start(const std::vector<std::int64_t>& tau, std::size_t end) {
  const auto [lo, hi] = window_levels(tau, end);
  std::size_t latest = 0;
  for (std::int64_t level = lo; level <= hi; ++level) {
    const auto runs = sublevel_runs(tau, end, level);
    latest = std::max(latest, runs.back().first);
  }
  return latest;
}

bool pairwise_coprime(std::int64_t p, std::int64_t q, std::int64_t r) {
  return std::gcd(p, q) == 1 && std::gcd(q, r) == 1 && std::gcd(p, r) == 1;
}

}  // namespace

bool TauSequence::stabilized() const {
  const std::size_t len = values.size();
  return len == 1 || values[len - 1] > values[len - 2];
}

TauSequence TauSequence::from_values(std::vector<std::int64_t> values) {
  if (values.empty()) throw DomainError("tau sequence is empty");
  if (values.front() != 0) throw DomainError("tau sequence must start with tau(0) = 0");
  TauSequence t;
  t.values = std::move(values);
  std::size_t s = t.values.size() - 1;
  while (s > 0 && t.values[s] > t.values[s - 1]) --s;
  t.stabilization_index = s;

  const std::size_t earliest = latest_component_start(t.values, s);
  for (std::size_t center = t.values.size(); center-- > earliest;) {
    if (palindromic(t.values, center)) {
      t.reflection_center = center;
      break;
    }
  }
  return t;
}

TauSequence tau_sequence_brieskorn(std::int64_t p, std::int64_t q, std::int64_t r,
                                   std::optional<std::int64_t> tail) {
  if (p < 1 || q < 1 || r < 1)
    throw DomainError("Brieskorn parameters must be positive");
  {
    // Friendlier message for the Sigma(2, 3, r) family.
    std::vector<std::int64_t> rest{p, q, r};
    for (std::int64_t known : {2, 3})
      if (auto it = std::find(rest.begin(), rest.end(), known); it != rest.end()) rest.erase(it);
    if (rest.size() == 1 && std::gcd(rest.front(), std::int64_t{6}) != 1)
      throw DomainError("r must be coprime to 6");
  }
  if (!pairwise_coprime(p, q, r))
    throw DomainError("Brieskorn parameters (" + std::to_string(p) + ", " + std::to_string(q) +
                      ", " + std::to_string(r) + ") are not pairwise coprime");
  constexpr std::int64_t kMaxProduct = 20'000'000;
  if (p > kMaxProduct / q || p * q > kMaxProduct / r)
    throw DomainError("Brieskorn triple too large for the tau generator");
  const std::int64_t pqr = p * q * r;
  const std::int64_t required = tail.value_or(pqr);
  if (required < 1) throw DomainError("stabilization tail must be positive");

  const std::int64_t n0 = pqr - p * q - q * r - p * r;
  const std::int64_t a = q * r, b = p * r, c = p * q;
  // Representation counts, extended on demand: r1 uses {a}, r2 {a, b}, r3 all.
  std::vector<std::int64_t> r2, r3;
  auto count = [&](std::int64_t n) -> std::int64_t {
    if (n < 0) return 0;
    while (static_cast<std::int64_t>(r3.size()) <= n) {
      const auto m = static_cast<std::int64_t>(r3.size());
      const std::int64_t v2 = (m % a == 0 ? 1 : 0) + (m >= b ? r2[static_cast<std::size_t>(m - b)] : 0);
      r2.push_back(v2);
      r3.push_back(v2 + (m >= c ? r3[static_cast<std::size_t>(m - c)] : 0));
    }
    return r3[static_cast<std::size_t>(n)];
  };

  constexpr std::size_t kMaxLength = std::size_t{1} << 26;
  std::vector<std::int64_t> tau{0};
  std::int64_t positive_run = 0;
  for (std::int64_t n = 0; positive_run < required || n <= n0 + 1; ++n) {
    if (tau.size() >= kMaxLength) throw DomainError("tau sequence failed to stabilize");
    const std::int64_t delta = count(n) - count(n0 - n);
    tau.push_back(tau.back() + delta);
    positive_run = delta > 0 ? positive_run + 1 : 0;
  }

  TauSequence t;
  t.values = std::move(tau);
  std::size_t s = t.values.size() - 1;
  while (s > 0 && t.values[s] > t.values[s - 1]) --s;
  t.stabilization_index = s;
  if (n0 + 1 >= 0) t.reflection_center = static_cast<std::size_t>(n0 + 1);
  return t;
}

// ---------------------------------------------------------------------------

GradedRoot::GradedRoot(std::vector<RootVertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw DomainError("graded root has no vertices");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& v = vertices_[i];
    if (v.id != static_cast<int>(i)) throw DomainError("graded root ids must be 0..V-1");
    if ((i == 0) != !v.parent.has_value())
      throw DomainError("graded root must have exactly one root, listed first");
    if (v.parent && (*v.parent < 0 || *v.parent >= static_cast<int>(i)))
      throw DomainError("graded root parents must precede their children");
    if (v.parent && vertices_[static_cast<std::size_t>(*v.parent)].level <= v.level)
      throw DomainError("graded root levels must increase toward the root");
    if (v.involution_image < 0 || v.involution_image >= static_cast<int>(vertices_.size()))
      throw DomainError("graded root involution image out of range");
  }
}

std::vector<int> GradedRoot::children(int id) const {
  std::vector<int> out;
  for (const auto& v : vertices_)
    if (v.parent == id) out.push_back(v.id);
  return out;
}

std::vector<int> GradedRoot::leaves() const {
  std::vector<bool> has_child(vertices_.size(), false);
  for (const auto& v : vertices_)
    if (v.parent) has_child[static_cast<std::size_t>(*v.parent)] = true;
  std::vector<int> out;
  for (const auto& v : vertices_)
    if (!has_child[static_cast<std::size_t>(v.id)]) out.push_back(v.id);
  return out;
}

std::vector<int> GradedRoot::level_vertices(std::int64_t level) const {
  std::vector<int> out;
  for (const auto& v : vertices_)
    if (v.level == level) out.push_back(v.id);
  std::sort(out.begin(), out.end(), [&](int x, int y) {
    return vertices_[static_cast<std::size_t>(x)].first <
           vertices_[static_cast<std::size_t>(y)].first;
  });
  return out;
}

std::int64_t GradedRoot::min_level() const {
  std::int64_t lo = vertices_.front().level;
  for (const auto& v : vertices_) lo = std::min(lo, v.level);
  return lo;
}

std::int64_t GradedRoot::max_level() const { return vertices_.front().level; }

bool GradedRoot::involution_is_automorphism() const {
  if (vertices_.front().involution_image != 0) return false;
  for (const auto& v : vertices_) {
    const auto& w = vertices_[static_cast<std::size_t>(v.involution_image)];
    if (w.involution_image != v.id) return false;
    if (w.level != v.level) return false;
    if (v.parent) {
      if (!w.parent) return false;
      if (vertices_[static_cast<std::size_t>(*v.parent)].involution_image != *w.parent)
        return false;
    }
  }
  return true;
}

GradedRoot graded_root(const TauSequence& t) {
  const auto& tau = t.values;
  if (tau.empty() || tau.front() != 0) throw DomainError("invalid tau sequence");
  if (!t.stabilized())
    throw DomainError("tau sequence is not stabilized: its last increment is not positive");
  const std::size_t end = t.stabilization_index;
  if (end >= tau.size()) throw DomainError("stabilization index out of range");
  const auto [lo, top] = window_levels(tau, end);
  // The root is the first level at which all components have merged; the
  // stalk above it carries no information.
  std::int64_t hi = lo;
  while (hi < top && sublevel_runs(tau, end, hi).size() > 1) ++hi;

  const std::optional<std::size_t> center = t.reflection_center;
  if (center) {
    if (*center >= tau.size() || !palindromic(tau, *center))
      throw DomainError("reflection center " + std::to_string(*center) +
                        " is not a symmetry of the tau sequence");
  }

  std::vector<RootVertex> vertices;
  std::map<std::int64_t, Runs> runs_at;
  std::map<std::int64_t, int> first_id_at;
  for (std::int64_t level = hi; level >= lo; --level) {
    Runs runs = sublevel_runs(tau, end, level);
    first_id_at[level] = static_cast<int>(vertices.size());
    for (const auto& [first, last] : runs) {
      RootVertex v;
      v.id = static_cast<int>(vertices.size());
      v.level = level;
      v.grading = -2 * level;
      v.first = first;
      v.last = last;
      if (level < hi) {
        const auto& above = runs_at.at(level + 1);
        v.parent = first_id_at.at(level + 1) + static_cast<int>(run_containing(above, first));
      }
      vertices.push_back(v);
    }
    runs_at.emplace(level, std::move(runs));
  }

  for (auto& v : vertices) {
    if (!center) {
      v.involution_image = v.id;
      continue;
    }
    const std::size_t c = *center;
    if (v.first > c)
      throw DomainError("reflection about " + std::to_string(c) +
                        " is not defined on a component of the graded root");
    const Runs& runs = runs_at.at(v.level);
    const std::size_t x = run_containing(runs, std::min(c - v.first, end));
    const std::size_t y = run_containing(runs, std::min(c - std::min(v.last, c), end));
    if (x != y || x == runs.size())
      throw DomainError("reflection does not map components to components");
    v.involution_image = first_id_at.at(v.level) + static_cast<int>(x);
  }
  return GradedRoot(std::move(vertices));
}

// ---------------------------------------------------------------------------

std::string to_string(Parity p) { return p == Parity::Even ? "EVEN" : "ODD"; }

std::string to_string(GradingTag g) {
  switch (g) {
    case GradingTag::Even: return "EVEN";
    case GradingTag::Odd: return "ODD";
    case GradingTag::Mixed: return "MIXED";
  }
  return "?";
}

FloerSummary floer_summary(const GradedRoot& g) {
  FloerSummary s;
  bool seen_even = false, seen_odd = false;
  for (std::int64_t level = g.max_level(); level >= g.min_level(); --level) {
    const auto ids = g.level_vertices(level);
    if (ids.size() < 2) continue;
    LevelBlock block;
    block.level = level;
    block.grading = -2 * level;
    block.vertex_count = static_cast<int>(ids.size());
    block.rank = block.vertex_count - 1;
    int fixed = 0;
    for (int id : ids)
      if (g.vertices()[static_cast<std::size_t>(id)].involution_image == id) ++fixed;
    block.parity = fixed > 0 ? Parity::Even : Parity::Odd;
    block.anti_invariant_dim = (block.vertex_count - fixed) / 2;
    block.trace = fixed - 1;
    s.total_rank += block.rank;
    s.anti_invariant_euler +=
        block.parity == Parity::Even ? block.anti_invariant_dim : -block.anti_invariant_dim;
    (block.parity == Parity::Even ? seen_even : seen_odd) = true;
    s.blocks.push_back(block);
  }
  s.z2_grading = seen_even && seen_odd ? GradingTag::Mixed
                 : seen_odd            ? GradingTag::Odd
                                       : GradingTag::Even;
  return s;
}

ReducedModule reduced_module(const GradedRoot& g) {
  ReducedModule mod;
  std::vector<std::vector<std::int64_t>> columns;  // built column by column
  for (std::int64_t level = g.max_level(); level >= g.min_level(); --level) {
    const auto ids = g.level_vertices(level);
    if (ids.size() < 2) continue;
    auto image = [&](int id) { return g.vertices()[static_cast<std::size_t>(id)].involution_image; };
    int dropped = ids.back();
    bool has_fixed = false;
    for (int id : ids)
      if (image(id) == id) {
        dropped = id;
        has_fixed = true;
        break;
      }
    std::map<int, std::size_t> index;  // vertex id -> global basis index
    for (int id : ids)
      if (id != dropped) index.emplace(id, mod.grading.size() + index.size());
    const std::size_t offset = mod.grading.size();
    for (int id : ids) {
      if (id == dropped) continue;
      std::vector<std::int64_t> col(offset + index.size(), 0);
      const int target = image(id);
      if (target == dropped) {
        for (const auto& [other, k] : index) col[k] = -1;
      } else {
        col[index.at(target)] = 1;
      }
      columns.push_back(std::move(col));
    }
    mod.grading.insert(mod.grading.end(), index.size(), has_fixed ? Parity::Even : Parity::Odd);
  }
  const std::size_t n = mod.grading.size();
  mod.j.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < columns[c].size(); ++r) mod.j[r][c] = columns[c][r];
  return mod;
}

BrieskornFloer brieskorn_floer(std::int64_t p, std::int64_t q, std::int64_t r) {
  TauSequence tau = tau_sequence_brieskorn(p, q, r);
  GradedRoot root = graded_root(tau);
  FloerSummary summary = floer_summary(root);
  std::vector<std::string> warnings;
  std::vector<std::int64_t> sorted{p, q, r};
  std::sort(sorted.begin(), sorted.end());
  const bool has2 = std::count(sorted.begin(), sorted.end(), 2) > 0;
  const bool has3 = std::count(sorted.begin(), sorted.end(), 3) > 0;
  if (!(has2 && has3))
    warnings.push_back("uncalibrated involution: the reflection involution is only validated "
                       "on Sigma(2,3,r)");
  return {std::move(tau), std::move(root), summary, std::move(warnings)};
}

}  // namespace twistspin
