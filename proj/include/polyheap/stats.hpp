#pragma once

// Means of path and heap statistics, exact or sampled, next to their
// asymptotic constants.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyheap/heaps.hpp"
#include "polyheap/series.hpp"

namespace polyheap {

struct AsymptoticConstants {
  Rational rho{1};
  Rational rho0{2, 7};
  Rational growth{7, 2};
  Rational amplitude{3, 8};
  Rational mu_cat{3, 14};
  Rational mu_se{1, 7};
  Rational mu_mindimers{3, 28};
  Rational width_lower{9, 28};
  Rational width_upper{6, 7};
};

const AsymptoticConstants& constants();

enum class Estimator { ExactDP, Exhaustive, Sampled };
std::string_view estimator_name(Estimator e);

struct StatReport {
  std::string statistic;
  int n = 0;
  Estimator kind = Estimator::ExactDP;
  std::uint64_t seed = 0;  // sampled only
  int samples = 0;         // sampled: m; exhaustive: number of objects

  std::optional<Rational> exact;  // exact estimators
  double mean = 0;
  double std_error = 0;  // sampled only
  std::optional<double> min, max;

  double normalized = 0;  // per unit of n, as the statistic defines it
  Rational target;        // constant the normalized value is compared with
  double relative_deviation = 0;
  std::vector<std::string> notes;
};

/// E[S_n]: total catastrophe height over cat excursions of length n.
StatReport expected_catastrophe_total(int n);
/// E[X_n]: number of D steps.
StatReport expected_se_count(int n);
/// Mean minimal-dimer count of stacked heaps of size n+1, i.e. one more than
/// the mean number of catastrophes above altitude 0. Normalized as (value-1)/n.
StatReport expected_minimal_dimers(int n);

struct WidthSampling {
  std::uint64_t seed = 0;
  int samples = 0;
};

/// Width of stacked heaps of size n, over the images of all cat excursions of
/// length n-1 (n <= kMaxEnumeratedHeapSize, else SizeTooLarge) or of uniform
/// samples. The comparison target is the interval [9/28, 6/7] per unit of n.
StatReport width_stats(int n);
StatReport width_stats(int n, WidthSampling sampling);

/// Sampled counterparts of the three exact path means at length n.
std::vector<StatReport> sampled_path_reports(int n, WidthSampling sampling);

struct GrowthRow {
  int n = 0;
  double ratio = 0;      // a(n) / a(n-1)
  double amplitude = 0;  // a(n) (2/7)^n
};

struct GrowthReport {
  std::vector<GrowthRow> rows;  // n = 1 .. nmax
  bool ratio_increasing = false;
  bool amplitude_decreasing = false;  // from n = 2 on
};

/// Counts of cat excursions against growth 7/2 and amplitude 3/8.
GrowthReport growth_check(int nmax);

/// Per-heap width bounds  width >= sum of gaps + factors + 1  and
/// width <= (length - D steps) + 2, with the path being phi of the heap.
struct WidthViolation {
  Heap heap;
  std::string path;
  int width = 0;
  int lower = 0;
  int upper = 0;
};

struct WidthInequalityReport {
  int max_size = 0;
  long long checked = 0;
  std::vector<WidthViolation> violations;
};

/// All stacked heaps of size 1..max_size: the exhaustive oracle up to its
/// cap, the images of all cat excursions beyond it.
WidthInequalityReport verify_width_inequalities(int max_size);

/// The two bounds for one stacked heap.
std::pair<int, int> width_bounds(const Heap& h);

}  // namespace polyheap
