#include <doctest.h>

#include <cstdlib>
#include <map>

#include "polyheap/error.hpp"
#include "polyheap/heaps.hpp"
#include "polyheap/paths.hpp"
#include "polyheap/series.hpp"

using namespace polyheap;

namespace {

ExactSeries poly(std::vector<Rational> c, std::size_t order) { return ExactSeries::polynomial(c, order); }

std::vector<long> as_longs(const ExactSeries& s, std::size_t count) {
  std::vector<long> out;
  for (std::size_t k = 0; k < count; ++k) {
    REQUIRE(s[k].get_den() == 1);
    out.push_back(s[k].get_num().get_si());
  }
  return out;
}

// Motzkin numbers from M(n) = M(n-1) + sum_k M(k) M(n-2-k).
std::vector<Integer> motzkin_recurrence(int nmax) {
  std::vector<Integer> m(static_cast<std::size_t>(nmax) + 1);
  m[0] = 1;
  for (int n = 1; n <= nmax; ++n) {
    m[static_cast<std::size_t>(n)] = m[static_cast<std::size_t>(n) - 1];
    for (int k = 0; k + 2 <= n; ++k)
      m[static_cast<std::size_t>(n)] += m[static_cast<std::size_t>(k)] * m[static_cast<std::size_t>(n - 2 - k)];
  }
  return m;
}

}  // namespace

TEST_CASE("arithmetic on small polynomials") {
  const std::size_t k = 8;
  CHECK(ps_arith(poly({1, 1}, k), poly({1, -1}, k), SeriesOp::Mul) == poly({1, 0, -1}, k));
  const ExactSeries geo = ps_arith(ExactSeries::constant(1, k), poly({1, -1}, k), SeriesOp::Div);
  for (std::size_t i = 0; i < k; ++i) CHECK(geo[i] == 1);
  CHECK(ps_arith(poly({1, 2}, k), poly({0, 3, 4}, k), SeriesOp::Add) == poly({1, 5, 4}, k));
  CHECK((poly({1, 2}, k) - poly({1, 2}, k)) == ExactSeries(k));
  CHECK((poly({1, 2}, k) * Rational(1, 2)) == poly({Rational(1, 2), 1}, k));
}

TEST_CASE("operations keep the truncation order") {
  const ExactSeries a = poly({1, 1, 1}, 7), b = poly({1, -1}, 7);
  CHECK((a + b).order() == 7);
  CHECK((a * b).order() == 7);
  CHECK((a / b).order() == 7);
  CHECK(sqrt(a).order() == 7);
}

TEST_CASE("sqrt of 1 - 2z - 3z^2") {
  const std::size_t k = 20;
  const ExactSeries in = poly({1, -2, -3}, k);
  const ExactSeries r = ps_arith(in, in, SeriesOp::Sqrt);
  CHECK(as_longs(r, 4) == std::vector<long>{1, -1, -2, -2});
  CHECK(r * r == in);
  const auto m = motzkin_recurrence(static_cast<int>(k));
  for (std::size_t n = 2; n < k; ++n) CHECK(r[n] == -2 * Rational(m[n - 2]));
}

TEST_CASE("division and square roots reject non-unit leading terms") {
  const ExactSeries z = ExactSeries::z(5);
  CHECK_THROWS_AS(ps_arith(ExactSeries::constant(1, 5), z, SeriesOp::Div), Error);
  try {
    sqrt(poly({4, 1}, 5));
    FAIL("sqrt accepted constant term 4");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonUnitSqrt);
  }
  try {
    inverse(z);
    FAIL("inverse accepted a zero constant term");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonUnitDivisor);
  }
}

TEST_CASE("small root") {
  CHECK(as_longs(gf::small_root_u1(6), 6) == std::vector<long>{0, 1, 1, 2, 4, 9});
  const ExactSeries one = gf::small_root_u1(1);
  CHECK(one.order() == 1);
  CHECK(one[0] == 0);
  const ExactSeries u = gf::small_root_u1(30);
  CHECK(u == closed_form::small_root_u1(30));
  const ExactSeries rhs = ExactSeries::z(30) * (ExactSeries::constant(1, 30) + u + u * u);
  CHECK(u == rhs);
}

TEST_CASE("Motzkin excursions") {
  const ExactSeries e = gf::motzkin_excursions(40);
  CHECK(as_longs(e, 8) == std::vector<long>{1, 1, 2, 4, 9, 21, 51, 127});
  CHECK(e[0] == 1);
  CHECK(e[10] == Rational(count_table(10, PathMode::Plain).excursions()));
  const auto m = motzkin_recurrence(39);
  for (std::size_t n = 0; n < 40; ++n) CHECK(e[n] == Rational(m[n]));
}

TEST_CASE("Motzkin meanders") {
  const ExactSeries m = gf::motzkin_meanders(30);
  CHECK(as_longs(m, 8) == std::vector<long>{1, 2, 5, 13, 35, 96, 267, 750});
  const ExactSeries e = gf::motzkin_excursions(30);
  CHECK(m == e / (ExactSeries::constant(1, 30) - e.shifted_up(1)));
  CHECK(m == closed_form::motzkin_meanders(30));
}

TEST_CASE("excursions with catastrophes") {
  const ExactSeries c = gf::catastrophe_excursions(30);
  CHECK(as_longs(c, 8) == std::vector<long>{1, 2, 6, 19, 63, 213, 729, 2513});
  CHECK(c[1] == 2);
  CHECK(c[12] == Rational(count_table(12, PathMode::Cat).excursions()));
  CHECK(c == closed_form::catastrophe_excursions(30));
}

TEST_CASE("half-pyramids") {
  const ExactSeries q = gf::half_pyramids(30);
  CHECK(as_longs(q, 7) == std::vector<long>{0, 1, 1, 2, 4, 9, 21});
  CHECK(q[1] == 1);
  CHECK(q == closed_form::half_pyramids(30));
}

TEST_CASE("pyramids by right width") {
  const BiSeries p = gf::pyramids(12);
  CHECK(p.row(2)[0] == 1);
  CHECK(p.row(2)[1] == 1);
  CHECK(p.row(3)[0] == 2);
  CHECK(p.row(3)[1] == 2);
  CHECK(p.row(3)[2] == 1);
  CHECK(as_longs(p.specialize(1), 6) == std::vector<long>{0, 1, 2, 5, 13, 35});
  CHECK(p.specialize(1) == closed_form::pyramids_at_one(12));
  CHECK(p.is_integral());
  for (std::size_t n = 0; n < p.order(); ++n) CHECK(p.row(n).size() <= n + 1);
}

TEST_CASE("pyramid table matches the exhaustive heap oracle") {
  const BiSeries p = gf::pyramids(8);
  HeapFilter f;
  f.strict = f.pyramid = true;
  for (int size = 1; size <= 7; ++size) {
    std::map<int, long> by_width;
    for (const Heap& h : enumerate_heaps(size, f)) ++by_width[right_width(h)];
    for (std::size_t j = 0; j < p.row(static_cast<std::size_t>(size)).size(); ++j) {
      CHECK(p.at(static_cast<std::size_t>(size), j) == by_width[static_cast<int>(j)]);
    }
  }
}

TEST_CASE("stacked table") {
  const TriSeries s = gf::stacked(10);
  for (std::size_t j = 0; j <= 2; ++j)
    for (std::size_t r = 0; r <= 2; ++r) {
      const long want = (r == 1 && j <= 1) ? 1 : 0;
      CHECK(s.at(2, j, r) == want);
    }
  CHECK(as_longs(s.specialize(1, 1), 7) == std::vector<long>{0, 1, 2, 6, 19, 63, 213});
  CHECK(s.is_integral());
  CHECK(gf::stacked(30).specialize(1, 1) == closed_form::stacked_at_one(30));
}

TEST_CASE("stacked table matches the exhaustive heap oracle") {
  const TriSeries s = gf::stacked(8);
  HeapFilter f;
  f.stacked = true;
  for (int size = 1; size <= 7; ++size) {
    std::map<std::pair<int, int>, long> tally;  // (right width of last factor, minimal dimers)
    for (const Heap& h : enumerate_heaps(size, f)) {
      const Factorization fac = pyramidal_factors(h);
      ++tally[{right_width(fac.factors.back()), static_cast<int>(fac.factors.size())}];
    }
    const auto n = static_cast<std::size_t>(size);
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t r = 0; r <= n; ++r) {
        const auto it = tally.find({static_cast<int>(j), static_cast<int>(r)});
        CHECK(s.at(n, j, r) == (it == tally.end() ? 0 : it->second));
      }
  }
}

TEST_CASE("the closed form for S(z) with a (1-z) leading factor is not a counting series") {
  // Same shape as the working closed form with the first factor 1-2z
  // replaced by 1-z; its expansion starts 1/4, 9/8, ...
  const std::size_t k = 12;
  const ExactSeries root = sqrt(poly({1, -3}, k + 1) * poly({1, 1}, k + 1));
  const ExactSeries num = poly({1, -1}, k + 1) * poly({1, -3}, k + 1) - poly({1, -4}, k + 1) * root;
  const ExactSeries variant = num.shifted_down(1) / poly({4, -14}, k);
  CHECK(variant[0] == Rational(1, 4));
  CHECK(variant[1] == Rational(9, 8));
  CHECK_FALSE(variant.is_integral());
  CHECK(closed_form::stacked_at_one(k).is_integral());
}

TEST_CASE("identity checks pass at orders 2 and 30") {
  for (std::size_t order : {std::size_t{2}, std::size_t{30}}) {
    const auto results = check_identities(order);
    CHECK(results.size() >= 9);
    for (const auto& r : results) {
      INFO(r.name);
      CHECK(r.passed);
      CHECK_FALSE(r.first_mismatch.has_value());
    }
  }
}

TEST_CASE("a corrupted half-pyramid series is caught at the corrupted index") {
  IdentityInputs in = build_identity_inputs(30);
  in.half_pyramids[7] += 1;
  bool seen = false;
  for (const auto& r : check_identities(in)) {
    if (r.name == "Q = z*E_M") {
      seen = true;
      CHECK_FALSE(r.passed);
      REQUIRE(r.first_mismatch.has_value());
      CHECK(*r.first_mismatch == 7);
    }
  }
  CHECK(seen);
}

TEST_CASE("default order follows POLYHEAP_ORDER") {
  unsetenv("POLYHEAP_ORDER");
  CHECK(default_series_order() == kDefaultSeriesOrder);
  setenv("POLYHEAP_ORDER", "17", 1);
  CHECK(default_series_order() == 17);
  setenv("POLYHEAP_ORDER", "junk", 1);
  CHECK(default_series_order() == kDefaultSeriesOrder);
  unsetenv("POLYHEAP_ORDER");
}

TEST_CASE("step set") {
  const StepSet s;
  CHECK(s.steps == std::vector<int>{-1, 0, 1});
  CHECK(s.c == 1);
  CHECK(s.d == 1);
}
