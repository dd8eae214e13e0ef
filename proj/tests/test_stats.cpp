#include <doctest.h>

#include <cmath>

#include "polyheap/bijection.hpp"
#include "polyheap/error.hpp"
#include "polyheap/paths.hpp"
#include "polyheap/stats.hpp"

using namespace polyheap;

namespace {

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidInput;
}

HeapFilter stacked_only() {
  HeapFilter f;
  f.stacked = true;
  return f;
}

Rational ratio(const Integer& a, std::size_t b) {
  Rational q(a, Integer(static_cast<unsigned long>(b)));
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("constants") {
  const AsymptoticConstants& c = constants();
  CHECK(c.rho0 == Rational(2, 7));
  CHECK(c.growth * c.rho0 == 1);
  CHECK(c.mu_cat + c.mu_mindimers == c.width_lower);
  CHECK(1 - c.mu_se == c.width_upper);
  CHECK(estimator_name(Estimator::Sampled) == "sampled");
  CHECK(estimator_name(Estimator::Exhaustive) == "exhaustive");
}

TEST_CASE("exact means at small n") {
  CHECK(*expected_catastrophe_total(2).exact == Rational(1, 6));
  CHECK(*expected_se_count(2).exact == Rational(1, 6));
  CHECK(*expected_minimal_dimers(2).exact == Rational(7, 6));
  CHECK(*expected_catastrophe_total(1).exact == 0);
  CHECK(*expected_se_count(1).exact == 0);
  CHECK(*expected_minimal_dimers(0).exact == 1);
  const StatReport r = expected_minimal_dimers(2);
  CHECK(r.kind == Estimator::ExactDP);
  CHECK(r.normalized == doctest::Approx(1.0 / 12));
  CHECK(code_of([] { expected_se_count(-1); }) == ErrorCode::InvalidInput);
}

TEST_CASE("exact means at n=1000") {
  const StatReport s = expected_catastrophe_total(1000);
  CHECK(s.normalized >= 0.2121);
  CHECK(s.normalized <= 0.2164);
  CHECK(s.relative_deviation < 0.01);
  const StatReport x = expected_se_count(1000);
  CHECK(x.relative_deviation < 0.01);
  const StatReport m = expected_minimal_dimers(1000);
  CHECK(m.relative_deviation < 0.02);
}

TEST_CASE("minimal-dimer mean equals the exhaustive mean over stacked heaps") {
  for (int n = 0; n <= 8; ++n) {
    Integer total = 0;
    const auto heaps = enumerate_heaps(n + 1, stacked_only());
    for (const Heap& h : heaps) total += static_cast<unsigned long>(h.minimal_dimers().size());
    CHECK(*expected_minimal_dimers(n).exact == ratio(total, heaps.size()));
  }
}

TEST_CASE("exhaustive widths") {
  const StatReport two = width_stats(2);
  CHECK(two.mean == 3);
  CHECK(*two.exact == 3);
  CHECK(two.kind == Estimator::Exhaustive);
  CHECK(two.samples == 2);
  const StatReport one = width_stats(1);
  CHECK(one.mean == 2);
  CHECK(*one.min == 2);
  CHECK(*one.max == 2);
  CHECK(two.notes.size() == 3);
  CHECK(code_of([] { width_stats(10); }) == ErrorCode::SizeTooLarge);
  CHECK(code_of([] { width_stats(0); }) == ErrorCode::InvalidInput);
}

TEST_CASE("exhaustive widths agree with the heap enumeration") {
  for (int n = 1; n <= 8; ++n) {
    Integer total = 0;
    const auto heaps = enumerate_heaps(n, stacked_only());
    for (const Heap& h : heaps) total += width(h);
    CHECK(*width_stats(n).exact == ratio(total, heaps.size()));
  }
}

TEST_CASE("sampled widths") {
  const StatReport a = width_stats(101, WidthSampling{5, 300});
  const StatReport b = width_stats(101, WidthSampling{5, 300});
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
  CHECK(a.kind == Estimator::Sampled);
  CHECK(a.samples == 300);
  CHECK(a.std_error > 0);
  CHECK(*a.min <= a.mean);
  CHECK(*a.max >= a.mean);
  CHECK(a.normalized > 9.0 / 28);
  CHECK(a.normalized < 6.0 / 7);
  CHECK(a.relative_deviation == 0);
  CHECK(code_of([] { width_stats(10, WidthSampling{1, 1}); }) == ErrorCode::InvalidInput);
}

TEST_CASE("sampled path means sit near the exact ones") {
  const int n = 60;
  const auto reports = sampled_path_reports(n, WidthSampling{11, 4000});
  REQUIRE(reports.size() == 3);
  const double exact[3] = {expected_catastrophe_total(n).mean, expected_se_count(n).mean,
                           expected_minimal_dimers(n).mean};
  for (std::size_t i = 0; i < 3; ++i) {
    INFO(reports[i].statistic);
    CHECK(std::abs(reports[i].mean - exact[i]) <= 5 * reports[i].std_error);
  }
}

TEST_CASE("growth") {
  const GrowthReport g = growth_check(10);
  REQUIRE(g.rows.size() == 10);
  CHECK(g.rows[6].n == 7);
  CHECK(g.rows[6].ratio == doctest::Approx(2513.0 / 729));
  CHECK(g.rows[0].amplitude == doctest::Approx(2 * 2.0 / 7));
  CHECK(g.ratio_increasing);
  CHECK(g.amplitude_decreasing);
  const GrowthReport big = growth_check(1000);
  CHECK(std::abs(big.rows.back().ratio - 3.5) <= 0.035);
  CHECK(big.rows.back().amplitude == doctest::Approx(0.375).epsilon(0.02));
  CHECK(code_of([] { growth_check(0); }) == ErrorCode::InvalidInput);
}

TEST_CASE("per-heap width bounds") {
  CHECK(width_bounds(phi_inv("UC")) == std::pair<int, int>{4, 4});
  CHECK(width_bounds(phi_inv("")) == std::pair<int, int>{2, 2});
  const WidthInequalityReport r = verify_width_inequalities(9);
  CHECK(r.violations.empty());
  long long expect = 0;
  for (const Integer& a : excursion_counts(8, PathMode::Cat)) expect += a.get_si();
  CHECK(r.checked == expect);
}
