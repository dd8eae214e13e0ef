#include <doctest.h>

#include <algorithm>

#include "polyheap/bijection.hpp"
#include "polyheap/error.hpp"

using namespace polyheap;

namespace {

Heap H(std::vector<Dimer> d) { return Heap(std::move(d)); }

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

HeapFilter filter(bool pyramid, bool half, bool stacked) {
  HeapFilter f;
  f.strict = true;
  f.pyramid = pyramid;
  f.half_pyramid = half;
  f.stacked = stacked;
  return f;
}

// Index of the D closing the excursion opened by the U at `open`.
std::size_t matching_down(std::string_view m, std::size_t open) {
  int h = 0;
  for (std::size_t i = open; i < m.size(); ++i) {
    if (m[i] == 'U') ++h;
    if (m[i] == 'D' && --h == 0) return i;
  }
  FAIL("unbalanced " << m);
  return m.size();
}

// First-return recursion, written from the decomposition rather than the
// library's stack machine.
Heap omega_inv_oracle(std::string_view m) {
  const Heap base = H({{0, 0}});
  if (m.empty()) return base;
  if (m[0] == 'F') return compose(base, omega_inv_oracle(m.substr(1)), -1);
  const std::size_t close = matching_down(m, 0);
  const Heap lower = compose(base, omega_inv_oracle(m.substr(1, close - 1)), -1);
  return compose(lower, omega_inv_oracle(m.substr(close + 1)), 0);
}

Heap psi_inv_oracle(std::string_view m) {
  const std::size_t c = m.find('C');
  if (c == std::string_view::npos) return omega_inv_oracle(m);
  return compose(omega_inv_oracle(m.substr(0, c)), psi_inv_oracle(m.substr(c + 1)), 1);
}

int c_count(const CatPath& p) { return static_cast<int>(std::count(p.tokens.begin(), p.tokens.end(), 'C')); }

}  // namespace

TEST_CASE("omega examples") {
  CHECK(omega(H({{0, 0}})).tokens.empty());
  CHECK(omega(H({{0, 0}, {-1, 1}, {0, 2}})).tokens == "UD");
  CHECK(omega(H({{0, 0}, {-1, 1}, {-2, 2}})).tokens == "FF");
  CHECK(omega(H({{0, 0}, {-1, 1}})).tokens == "F");
  CHECK(code_of([] { omega(H({{0, 0}, {1, 1}})); }) == ErrorCode::NotHalfPyramid);
}

TEST_CASE("omega_inv examples") {
  CHECK(omega_inv("UFD").dimers() == std::vector<Dimer>{{0, 0}, {-1, 1}, {-2, 2}, {0, 2}});
  CHECK(omega_inv("").dimers() == std::vector<Dimer>{{0, 0}});
  CHECK(omega_inv("F").dimers() == std::vector<Dimer>{{0, 0}, {-1, 1}});
  CHECK(code_of([] { omega_inv("UC"); }) == ErrorCode::InvalidPath);
  CHECK(code_of([] { omega_inv("D"); }) == ErrorCode::InvalidPath);
  CHECK(code_of([] { omega_inv("C"); }) == ErrorCode::InvalidPath);
}

TEST_CASE("omega_inv agrees with the recursive oracle") {
  for (int n = 0; n <= 10; ++n)
    for (const CatPath& p : enumerate(n, PathMode::Plain)) {
      INFO(p.tokens);
      CHECK(omega_inv(p.tokens).dimers() == omega_inv_oracle(p.tokens).dimers());
    }
}

TEST_CASE("omega round trips") {
  for (int size = 1; size <= 9; ++size)
    for (const Heap& q : enumerate_heaps(size, filter(false, true, false))) {
      const CatPath m = omega(q);
      CHECK(m.size() + 1 == q.size());
      CHECK(is_valid(m.tokens, PathMode::Plain));
      CHECK(omega_inv(m.tokens) == q);
    }
  for (int n = 0; n <= 10; ++n)
    for (const CatPath& p : enumerate(n, PathMode::Plain)) {
      const Heap q = omega_inv(p.tokens);
      CHECK(classify(q).half_pyramid);
      CHECK(is_strict(q));
      CHECK(omega(q) == p);
    }
}

TEST_CASE("psi examples") {
  CHECK(psi(H({{0, 0}, {1, 1}})).tokens == "C");
  CHECK(psi(H({{0, 0}, {-1, 1}, {1, 1}})).tokens == "FC");
  const Heap q = H({{0, 0}, {-1, 1}, {0, 2}});
  CHECK(psi(q) == omega(q));
  CHECK(code_of([] { psi(H({{0, 0}, {2, 0}})); }) == ErrorCode::NotAPyramid);
}

TEST_CASE("psi_inv examples") {
  CHECK(psi_inv("C").dimers() == std::vector<Dimer>{{0, 0}, {1, 1}});
  CHECK(psi_inv("").dimers() == std::vector<Dimer>{{0, 0}});
  CHECK(psi_inv("FC").dimers() == std::vector<Dimer>{{0, 0}, {-1, 1}, {1, 1}});
  CHECK(code_of([] { psi_inv("UC"); }) == ErrorCode::InvalidPath);
  CHECK(code_of([] { psi_inv("UU"); }) == ErrorCode::InvalidPath);
}

TEST_CASE("psi round trips and C count equals right width") {
  for (int size = 1; size <= 9; ++size)
    for (const Heap& p : enumerate_heaps(size, filter(true, false, false))) {
      const CatPath m = psi(p);
      CHECK(m.size() + 1 == p.size());
      CHECK(is_valid(m.tokens, PathMode::Cat0));
      CHECK(c_count(m) == right_width(p));
      CHECK(psi_inv(m.tokens) == p);
      if (is_half_pyramid(p)) CHECK(m == omega(p));
    }
  for (int n = 0; n <= 10; ++n)
    for (const CatPath& p : enumerate(n, PathMode::Cat0)) {
      INFO(p.tokens);
      const Heap h = psi_inv(p.tokens);
      CHECK(h.dimers() == psi_inv_oracle(p.tokens).dimers());
      CHECK(psi(h) == p);
    }
}

TEST_CASE("parse segments") {
  const SegmentParse a = parse_segments("UC");
  REQUIRE(a.segments.size() == 1);
  CHECK(a.segments[0].begin == 0);
  CHECK(a.segments[0].catastrophe == 1);
  CHECK(a.segments[0].gap == 1);
  CHECK(a.segments[0].climbs == std::vector<std::size_t>{0});
  CHECK(a.tail_begin == 2);

  const SegmentParse b = parse_segments("UUCFUDC");
  REQUIRE(b.segments.size() == 1);
  CHECK(b.segments[0].gap == 2);
  CHECK(b.segments[0].climbs == std::vector<std::size_t>{0, 1});
  CHECK(b.tail_begin == 3);

  const SegmentParse c = parse_segments("UDUFCUC");
  REQUIRE(c.segments.size() == 2);
  CHECK(c.segments[0].climbs == std::vector<std::size_t>{2});
  CHECK(c.segments[0].catastrophe == 4);
  CHECK(c.segments[1].begin == 5);
  CHECK(c.segments[1].climbs == std::vector<std::size_t>{5});
  CHECK(c.tail_begin == 7);

  const SegmentParse d = parse_segments("FCUD");
  CHECK(d.segments.empty());
  CHECK(d.tail_begin == 0);

  CHECK(code_of([] { parse_segments("UU"); }) == ErrorCode::InvalidPath);
}

TEST_CASE("after the last climb out of 0 a segment stays above 0") {
  for (int n = 1; n <= 9; ++n)
    for (const CatPath& p : enumerate(n, PathMode::Cat)) {
      const std::vector<int> alt = altitude_profile(p.tokens);
      for (const Segment& s : parse_segments(p.tokens).segments) {
        REQUIRE(s.climbs.size() == static_cast<std::size_t>(s.gap));
        CHECK(alt[s.catastrophe] == s.gap);
        for (std::size_t j = 0; j < s.climbs.size(); ++j) {
          CHECK(alt[s.climbs[j]] == static_cast<int>(j));
          CHECK(p.tokens[s.climbs[j]] == 'U');
          for (std::size_t i = s.climbs[j] + 1; i <= s.catastrophe; ++i) CHECK(alt[i] > static_cast<int>(j));
        }
      }
    }
}

TEST_CASE("phi examples") {
  CHECK(phi(H({{0, 0}, {-2, 0}, {-1, 1}})).tokens == "UC");
  CHECK(phi(H({{0, 0}, {-3, 0}, {-2, 1}, {-1, 2}})).tokens == "UUC");
  const Heap p = H({{0, 0}, {-1, 1}, {1, 1}});
  CHECK(phi(p) == psi(p));
  CHECK(code_of([] { phi(H({{0, 0}, {2, 0}})); }) == ErrorCode::NotStacked);
  CHECK(code_of([] { phi(H({{0, 0}, {0, 1}})); }) == ErrorCode::NotStacked);
  CHECK(code_of([] { phi(H({{0, 0}, {3, 0}})); }) == ErrorCode::NotStacked);
}

TEST_CASE("phi_inv examples") {
  CHECK(phi_inv("UC").dimers() == std::vector<Dimer>{{0, 0}, {2, 0}, {1, 1}});
  CHECK(phi_inv("UC") == H({{0, 0}, {-2, 0}, {-1, 1}}));
  CHECK(phi_inv("").dimers() == std::vector<Dimer>{{0, 0}});
  const Heap h = phi_inv("UUC");
  const Factorization f = pyramidal_factors(h);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].size() == 3);
  CHECK(f.factors[1].size() == 1);
  CHECK(f.gaps == std::vector<int>{2});
  CHECK(classify(h).stacked);
  CHECK(h == H({{0, 0}, {-3, 0}, {-2, 1}, {-1, 2}}));
  CHECK(code_of([] { phi_inv("D"); }) == ErrorCode::InvalidPath);
  CHECK(code_of([] { phi_inv("UX"); }) == ErrorCode::InvalidPath);
  CHECK(code_of([] { phi_inv_streaming("U"); }) == ErrorCode::InvalidPath);
}

TEST_CASE("phi round trips on all stacked heaps up to size 9") {
  for (int size = 1; size <= 9; ++size)
    for (const Heap& h : enumerate_heaps(size, filter(false, false, true))) {
      const CatPath m = phi(h);
      CHECK(m.size() + 1 == h.size());
      CHECK(is_valid(m.tokens, PathMode::Cat));
      CHECK(phi_inv(m.tokens).dimers() == h.dimers());
    }
}

TEST_CASE("phi_inv round trips on all paths up to length 10") {
  for (int n = 0; n <= 10; ++n)
    for (const CatPath& p : enumerate(n, PathMode::Cat)) {
      const Heap h = phi_inv(p.tokens);
      CHECK(h.size() == p.size() + 1);
      CHECK(classify(h).stacked);
      CHECK(phi(h) == p);
      CHECK(phi_inv_streaming(p.tokens).dimers() == h.dimers());
    }
}

TEST_CASE("restriction coherence") {
  for (int n = 0; n <= 8; ++n) {
    for (const CatPath& p : enumerate(n, PathMode::Plain)) {
      CHECK(phi_inv(p.tokens) == omega_inv(p.tokens));
      CHECK(psi_inv(p.tokens) == omega_inv(p.tokens));
    }
    for (const CatPath& p : enumerate(n, PathMode::Cat0)) CHECK(phi_inv(p.tokens) == psi_inv(p.tokens));
  }
  for (int size = 1; size <= 8; ++size)
    for (const Heap& p : enumerate_heaps(size, filter(true, false, false))) CHECK(phi(p) == psi(p));
}

TEST_CASE("statistics carried across phi") {
  for (int size = 1; size <= 9; ++size)
    for (const Heap& h : enumerate_heaps(size, filter(false, false, true))) {
      const PathStats s = validate(phi(h).tokens, PathMode::Cat);
      const Factorization f = pyramidal_factors(h);
      CHECK(s.high_cat_count + 1 == static_cast<int>(h.minimal_dimers().size()));
      std::vector<int> high;
      for (int a : s.catastrophe_altitudes)
        if (a > 0) high.push_back(a);
      std::vector<int> gaps(f.gaps.rbegin(), f.gaps.rend());
      CHECK(high == gaps);
      CHECK(c_count(psi(f.factors.back())) == right_width(f.factors.back()));
    }
}

TEST_CASE("streaming inverse at larger sizes") {
  for (const CatPath& p : sample_uniform(200, PathMode::Cat, 99, 40)) {
    const Heap h = phi_inv_streaming(p.tokens);
    CHECK(h.dimers() == phi_inv(p.tokens).dimers());
    CHECK(phi(h) == p);
  }
}
