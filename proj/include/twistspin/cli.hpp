#pragma once

// Command-line frontend. Verbs: alex, spin, deg, gradedroot, sweep, selftest.
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace twistspin {

struct SweepRow {
  std::int64_t r = 0;
  std::int64_t k = 0;
  std::int64_t rank = 0;
  std::int64_t chi = 0;
  std::int64_t deg_montesinos = 0;
  std::int64_t deg_closed_form = 0;
  bool agree = false;
};

// Rows for Sigma(2, 3, r), r <= r_max, gcd(r, 6) = 1, in ascending r. r = 1
// is only included on request. Rows are computed on up to `threads` workers.
std::vector<SweepRow> sweep_brieskorn_23(std::int64_t r_max, bool include_trivial,
                                         unsigned threads);

// TWISTSPIN_THREADS if set (must be a positive integer), else the hardware
// concurrency.
unsigned thread_cap_from_env();

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace twistspin
