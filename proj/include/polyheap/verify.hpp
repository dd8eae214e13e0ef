#pragma once

// Acceptance checks, shared by `polyheap verify` and the acceptance test.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace polyheap {

struct CheckResult {
  int criterion = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// 1. Path counts against the reference prefixes, by enumeration (n <= max_enum),
/// DP and series coefficients (n <= max_dp).
CheckResult check_path_counts(int max_enum, int max_dp);
/// 2. Exhaustive heap counts for sizes 1..max_size.
CheckResult check_heap_counts(int max_size);
/// 3. Round trips and agreement of the restrictions.
CheckResult check_roundtrips(int max_heap_size, int max_path_length);
/// 4. Catastrophes, minimal dimers, gaps and right widths line up.
CheckResult check_transport(int max_path_length);
/// 5. Generating-function identities.
CheckResult check_series_identities(int order);
/// 6. Rotation map round trips and directed-animal counts.
CheckResult check_animals(int max_animal_size, int max_heap_size);
/// 7. Exact means and coefficient growth at length n.
CheckResult check_means(int n);
/// 8. Per-heap width bounds up to max_size; sampled mean width at size n.
CheckResult check_width_bounds(int max_size, int n, int samples, std::uint64_t seed);
/// 9. Chi-square fit of the sampler at length n and reproducibility.
CheckResult check_sampler(int n, int samples_per_path, std::uint64_t seed);

inline constexpr std::uint64_t kVerifySeed = 20240611;

/// "counts" (1, 2), "roundtrip" (3, 4, 6), "identities" (5), "bounds" (7, 8),
/// "sampler" (9) or "all". max_n scales the exhaustive ranges; 9 gives the
/// full acceptance sizes. Throws InvalidInput on an unknown suite.
std::vector<CheckResult> run_suite(std::string_view suite, int max_n);

/// "PASS [3] roundtrip: detail (1.2 s)"
std::string format_result(const CheckResult& r);

}  // namespace polyheap
