#include "polyheap/stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polyheap/bijection.hpp"
#include "polyheap/error.hpp"
#include "polyheap/paths.hpp"

namespace polyheap {

namespace {

double to_double(const Rational& q) { return q.get_d(); }

void finish_exact(StatReport& r, const Rational& value, const Rational& normalized) {
  r.exact = value;
  r.mean = to_double(value);
  r.normalized = to_double(normalized);
  r.relative_deviation = std::abs(r.normalized - to_double(r.target)) / to_double(r.target);
}

void check_n(int n, int least) {
  if (n < least) throw Error(ErrorCode::InvalidInput, "n must be at least " + std::to_string(least));
}

StatReport exact_report(std::string name, int n, const Rational& value, const Rational& target) {
  StatReport r;
  r.statistic = std::move(name);
  r.n = n;
  r.kind = Estimator::ExactDP;
  r.target = target;
  finish_exact(r, value, n > 0 ? Rational(value / n) : Rational(0));
  return r;
}

void add_width_notes(StatReport& r) {
  const double n = r.n;
  r.notes.push_back("lower bound read as (9/28)*n = " + std::to_string(9.0 / 28.0 * n));
  r.notes.push_back("lower bound read literally as 9/(28*n) = " + std::to_string(9.0 / (28.0 * n)));
  r.notes.push_back("upper bound (6/7)*n = " + std::to_string(6.0 / 7.0 * n));
}

// Distance of normalized from the open interval, relative to its nearer end;
// zero inside.
double interval_deviation(double x, const AsymptoticConstants& c) {
  const double lo = to_double(c.width_lower), hi = to_double(c.width_upper);
  if (x <= lo) return (lo - x) / lo;
  if (x >= hi) return (x - hi) / hi;
  return 0;
}

}  // namespace

const AsymptoticConstants& constants() {
  static const AsymptoticConstants c;
  return c;
}

std::string_view estimator_name(Estimator e) {
  switch (e) {
    case Estimator::ExactDP: return "exact";
    case Estimator::Exhaustive: return "exhaustive";
    case Estimator::Sampled: return "sampled";
  }
  return "?";
}

StatReport expected_catastrophe_total(int n) {
  check_n(n, 0);
  return exact_report("catastrophe_total", n, exact_expectations(n).catastrophe_total, constants().mu_cat);
}

StatReport expected_se_count(int n) {
  check_n(n, 0);
  return exact_report("se_count", n, exact_expectations(n).se_count, constants().mu_se);
}

StatReport expected_minimal_dimers(int n) {
  check_n(n, 0);
  const Rational high = exact_expectations(n).high_cat_count;
  StatReport r;
  r.statistic = "minimal_dimers";
  r.n = n;
  r.kind = Estimator::ExactDP;
  r.target = constants().mu_mindimers;
  finish_exact(r, high + 1, n > 0 ? Rational(high / n) : Rational(0));
  return r;
}

StatReport width_stats(int n) {
  check_n(n, 1);
  if (n > kMaxEnumeratedHeapSize) {
    throw Error(ErrorCode::SizeTooLarge,
                "exhaustive widths are capped at size " + std::to_string(kMaxEnumeratedHeapSize));
  }
  StatReport r;
  r.statistic = "width";
  r.n = n;
  r.kind = Estimator::Exhaustive;
  r.target = constants().width_lower;
  Integer total = 0;
  int lo = 0, hi = 0;
  const auto paths = enumerate(n - 1, PathMode::Cat);
  for (std::size_t k = 0; k < paths.size(); ++k) {
    const int w = width(phi_inv(paths[k].tokens));
    total += w;
    lo = k == 0 ? w : std::min(lo, w);
    hi = k == 0 ? w : std::max(hi, w);
  }
  r.samples = static_cast<int>(paths.size());
  Rational mean(total, Integer(static_cast<unsigned long>(paths.size())));
  mean.canonicalize();
  finish_exact(r, mean, mean / n);
  r.relative_deviation = interval_deviation(r.normalized, constants());
  r.min = lo;
  r.max = hi;
  add_width_notes(r);
  return r;
}

StatReport width_stats(int n, WidthSampling sampling) {
  check_n(n, 1);
  if (sampling.samples < 2) throw Error(ErrorCode::InvalidInput, "sampled widths need at least two samples");
  StatReport r;
  r.statistic = "width";
  r.n = n;
  r.kind = Estimator::Sampled;
  r.seed = sampling.seed;
  r.samples = sampling.samples;
  r.target = constants().width_lower;
  const UniformSampler sampler(n - 1, PathMode::Cat);
  double sum = 0, sum_sq = 0;
  int lo = 0, hi = 0;
  for (int k = 0; k < sampling.samples; ++k) {
    const CatPath path = sampler.sample(sampling.seed + static_cast<std::uint64_t>(k));
    const int w = width(phi_inv_streaming(path.tokens));
    sum += w;
    sum_sq += static_cast<double>(w) * w;
    lo = k == 0 ? w : std::min(lo, w);
    hi = k == 0 ? w : std::max(hi, w);
  }
  const double m = sampling.samples;
  r.mean = sum / m;
  const double var = std::max(0.0, (sum_sq - m * r.mean * r.mean) / (m - 1));
  r.std_error = std::sqrt(var / m);
  r.normalized = r.mean / n;
  r.relative_deviation = interval_deviation(r.normalized, constants());
  r.min = lo;
  r.max = hi;
  add_width_notes(r);
  return r;
}

std::vector<StatReport> sampled_path_reports(int n, WidthSampling sampling) {
  check_n(n, 1);
  if (sampling.samples < 2) throw Error(ErrorCode::InvalidInput, "sampled means need at least two samples");
  const AsymptoticConstants& c = constants();
  std::vector<StatReport> out(3);
  const char* names[3] = {"catastrophe_total", "se_count", "minimal_dimers"};
  const Rational targets[3] = {c.mu_cat, c.mu_se, c.mu_mindimers};
  double sum[3] = {0, 0, 0}, sum_sq[3] = {0, 0, 0};
  const UniformSampler sampler(n, PathMode::Cat);
  for (int k = 0; k < sampling.samples; ++k) {
    const PathStats s = validate(sampler.sample(sampling.seed + static_cast<std::uint64_t>(k)).tokens, PathMode::Cat);
    const double v[3] = {static_cast<double>(s.cumulative_catastrophe_size), static_cast<double>(s.down),
                         static_cast<double>(s.high_cat_count) + 1};
    for (int i = 0; i < 3; ++i) {
      sum[i] += v[i];
      sum_sq[i] += v[i] * v[i];
    }
  }
  const double m = sampling.samples;
  for (int i = 0; i < 3; ++i) {
    StatReport& r = out[static_cast<std::size_t>(i)];
    r.statistic = names[i];
    r.n = n;
    r.kind = Estimator::Sampled;
    r.seed = sampling.seed;
    r.samples = sampling.samples;
    r.target = targets[i];
    r.mean = sum[i] / m;
    r.std_error = std::sqrt(std::max(0.0, (sum_sq[i] - m * r.mean * r.mean) / (m - 1)) / m);
    r.normalized = (i == 2 ? r.mean - 1 : r.mean) / n;
    r.relative_deviation = std::abs(r.normalized - to_double(r.target)) / to_double(r.target);
  }
  return out;
}

GrowthReport growth_check(int nmax) {
  check_n(nmax, 1);
  const std::vector<Integer> a = excursion_counts(nmax, PathMode::Cat);
  GrowthReport g;
  Integer two_pow = 1, seven_pow = 1;
  for (int n = 1; n <= nmax; ++n) {
    two_pow *= 2;
    seven_pow *= 7;
    GrowthRow row;
    row.n = n;
    row.ratio = Rational(a[static_cast<std::size_t>(n)], a[static_cast<std::size_t>(n) - 1]).get_d();
    Rational amp(a[static_cast<std::size_t>(n)] * two_pow, seven_pow);
    amp.canonicalize();
    row.amplitude = amp.get_d();
    g.rows.push_back(row);
  }
  g.ratio_increasing = true;
  g.amplitude_decreasing = true;
  for (std::size_t k = 1; k < g.rows.size(); ++k) {
    if (!(g.rows[k].ratio > g.rows[k - 1].ratio)) g.ratio_increasing = false;
    if (k >= 2 && !(g.rows[k].amplitude < g.rows[k - 1].amplitude)) g.amplitude_decreasing = false;
  }
  return g;
}

std::pair<int, int> width_bounds(const Heap& h) {
  const CatPath path = phi(h);
  const PathStats s = validate(path.tokens, PathMode::Cat);
  int gaps = 0;
  for (int alt : s.catastrophe_altitudes) gaps += alt;
  const int factors = static_cast<int>(h.minimal_dimers().size());
  return {gaps + factors + 1, static_cast<int>(path.size()) - s.down + 2};
}

WidthInequalityReport verify_width_inequalities(int max_size) {
  WidthInequalityReport report;
  report.max_size = max_size;
  auto check = [&](const Heap& h) {
    ++report.checked;
    const auto [lower, upper] = width_bounds(h);
    const int w = width(h);
    if (w < lower || w > upper) report.violations.push_back({h, phi(h).tokens, w, lower, upper});
  };
  HeapFilter stacked;
  stacked.stacked = true;
  for (int size = 1; size <= max_size; ++size) {
    if (size <= kMaxEnumeratedHeapSize) {
      for (const Heap& h : enumerate_heaps(size, stacked)) check(h);
    } else {
      for (const CatPath& p : enumerate(size - 1, PathMode::Cat)) check(phi_inv(p.tokens));
    }
  }
  return report;
}

}  // namespace polyheap
