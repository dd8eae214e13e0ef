#include "polyheap/series.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "polyheap/error.hpp"

namespace polyheap {

std::size_t default_series_order() {
  if (const char* env = std::getenv("POLYHEAP_ORDER")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return kDefaultSeriesOrder;
}

// ---------------------------------------------------------------------------
// ExactSeries

ExactSeries::ExactSeries(std::size_t order) : coeffs_(order) {}

ExactSeries::ExactSeries(std::vector<Rational> coefficients, std::size_t order)
    : coeffs_(std::move(coefficients)) {
  coeffs_.resize(order);
}

ExactSeries ExactSeries::constant(const Rational& c, std::size_t order) {
  ExactSeries s(order);
  if (order > 0) s.coeffs_[0] = c;
  return s;
}

ExactSeries ExactSeries::z(std::size_t order) {
  ExactSeries s(order);
  if (order > 1) s.coeffs_[1] = 1;
  return s;
}

ExactSeries ExactSeries::polynomial(const std::vector<Rational>& coefficients, std::size_t order) {
  return ExactSeries(coefficients, order);
}

ExactSeries ExactSeries::truncated(std::size_t order) const {
  return ExactSeries(coeffs_, std::min(order, this->order()));
}

ExactSeries ExactSeries::shifted_up(std::size_t k) const {
  ExactSeries s(order());
  for (std::size_t i = 0; i + k < order(); ++i) s.coeffs_[i + k] = coeffs_[i];
  return s;
}

ExactSeries ExactSeries::shifted_down(std::size_t k) const {
  if (k > order()) throw Error(ErrorCode::OrderMismatch, "shift exceeds series order");
  for (std::size_t i = 0; i < k; ++i) {
    if (coeffs_[i] != 0) {
      throw Error(ErrorCode::NonUnitDivisor,
                  "division by z^" + std::to_string(k) + " of a series with nonzero z^" +
                      std::to_string(i) + " coefficient");
    }
  }
  return ExactSeries(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()),
                     order() - k);
}

bool ExactSeries::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& q) { return q.get_den() == 1; });
}

ExactSeries& ExactSeries::operator+=(const ExactSeries& other) {
  coeffs_.resize(std::min(order(), other.order()));
  for (std::size_t i = 0; i < order(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

ExactSeries& ExactSeries::operator-=(const ExactSeries& other) {
  coeffs_.resize(std::min(order(), other.order()));
  for (std::size_t i = 0; i < order(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

ExactSeries& ExactSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

ExactSeries operator*(const ExactSeries& a, const ExactSeries& b) {
  const std::size_t k = std::min(a.order(), b.order());
  ExactSeries out(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < k; ++j) {
      if (b.coeffs_[j] == 0) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

ExactSeries inverse(const ExactSeries& a) {
  const std::size_t k = a.order();
  if (k == 0) return a;
  if (a[0] == 0) throw Error(ErrorCode::NonUnitDivisor, "divisor has zero constant term");
  ExactSeries b(k);
  const Rational inv0 = 1 / a[0];
  b[0] = inv0;
  for (std::size_t n = 1; n < k; ++n) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= n; ++i) acc += a[i] * b[n - i];
    b[n] = -acc * inv0;
  }
  return b;
}

ExactSeries operator/(const ExactSeries& a, const ExactSeries& b) {
  const std::size_t k = std::min(a.order(), b.order());
  return a.truncated(k) * inverse(b.truncated(k));
}

ExactSeries sqrt(const ExactSeries& a) {
  const std::size_t k = a.order();
  if (k == 0) return a;
  if (a[0] != 1) throw Error(ErrorCode::NonUnitSqrt, "sqrt requires constant term 1");
  // Newton: s <- (s + a/s)/2 doubles the number of correct coefficients.
  std::vector<Rational> s{Rational(1)};
  std::size_t precision = 1;
  const Rational half(1, 2);
  while (precision < k) {
    precision = std::min(2 * precision, k);
    ExactSeries current(s, precision);
    ExactSeries next = (current + a.truncated(precision) / current) * half;
    s = next.coefficients();
  }
  return ExactSeries(s, k);
}

ExactSeries power(const ExactSeries& a, unsigned exponent) {
  ExactSeries result = ExactSeries::constant(1, a.order());
  for (unsigned i = 0; i < exponent; ++i) result = result * a;
  return result;
}

ExactSeries ps_arith(const ExactSeries& a, const ExactSeries& b, SeriesOp op) {
  switch (op) {
    case SeriesOp::Add: return a + b;
    case SeriesOp::Mul: return a * b;
    case SeriesOp::Div: return a / b;
    case SeriesOp::Sqrt: return sqrt(a);
  }
  return a;
}

std::optional<std::size_t> first_mismatch(const ExactSeries& a, const ExactSeries& b) {
  const std::size_t k = std::min(a.order(), b.order());
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] != b[i]) return i;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// BiSeries / TriSeries

BiSeries::BiSeries(std::size_t order) : table_(order) {
  for (std::size_t n = 0; n < order; ++n) table_[n].resize(n + 1);
}

ExactSeries BiSeries::specialize(const Rational& u) const {
  ExactSeries out(order());
  for (std::size_t n = 0; n < order(); ++n) {
    Rational upow = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      out[n] += table_[n][j] * upow;
      upow *= u;
    }
  }
  return out;
}

bool BiSeries::is_integral() const {
  for (const auto& row : table_)
    for (const auto& c : row)
      if (c.get_den() != 1) return false;
  return true;
}

TriSeries::TriSeries(std::size_t order) : table_(order) {
  for (std::size_t n = 0; n < order; ++n) {
    table_[n].resize(n + 1);
    for (auto& inner : table_[n]) inner.resize(n + 1);
  }
}

ExactSeries TriSeries::specialize(const Rational& u, const Rational& t) const {
  ExactSeries out(order());
  for (std::size_t n = 0; n < order(); ++n) {
    Rational upow = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      Rational tpow = 1;
      for (std::size_t r = 0; r <= n; ++r) {
        out[n] += table_[n][j][r] * upow * tpow;
        tpow *= t;
      }
      upow *= u;
    }
  }
  return out;
}

bool TriSeries::is_integral() const {
  for (const auto& plane : table_)
    for (const auto& row : plane)
      for (const auto& c : row)
        if (c.get_den() != 1) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Generating functions assembled from the kernel root.

namespace {

ExactSeries one(std::size_t order) { return ExactSeries::constant(1, order); }

ExactSeries linear(const Rational& c0, const Rational& c1, std::size_t order) {
  return ExactSeries::polynomial({c0, c1}, order);
}

// P(z,u) = sum_j u^j Q^(j+1)
BiSeries pyramids_from(const ExactSeries& q) {
  const std::size_t k = q.order();
  BiSeries p(k);
  ExactSeries qpow = q;
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t n = j; n < k; ++n) p.at(n, j) = qpow[n];
    qpow = qpow * q;
  }
  return p;
}

// z F(z,u) with F = E / (1 - u z E) = sum_j u^j z^j E^(j+1)
BiSeries shifted_meander_table(const ExactSeries& e) {
  const std::size_t k = e.order();
  BiSeries f(k);
  ExactSeries epow = e;
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t n = j + 1; n < k; ++n) f.at(n, j) = epow[n - j - 1];
    epow = epow * e;
  }
  return f;
}

// S(z,u,t) = sum_m t^(m+1) P(z,u) P(z,1)^(2m)
TriSeries stacked_from(const BiSeries& p) {
  const std::size_t k = p.order();
  TriSeries s(k);
  const ExactSeries p1 = p.specialize(1);
  const ExactSeries p1sq = p1 * p1;
  ExactSeries weight = one(k);
  for (std::size_t m = 0; m + 1 < k; ++m) {
    const std::size_t lowdeg = 2 * m;  // P(z,1)^(2m) starts at z^(2m)
    if (lowdeg + 1 >= k) break;
    for (std::size_t n = lowdeg + 1; n < k; ++n) {
      for (std::size_t j = 0; j <= n; ++j) {
        Rational acc = 0;
        for (std::size_t a = std::max<std::size_t>(j, 1); a + lowdeg <= n; ++a) {
          const Rational& pc = p.at(a, j);
          if (pc == 0) continue;
          acc += pc * weight[n - a];
        }
        s.at(n, j, m + 1) = acc;
      }
    }
    weight = weight * p1sq;
  }
  return s;
}

ExactSeries discriminant(std::size_t order) {  // 1 - 2z - 3z^2
  return ExactSeries::polynomial({1, -2, -3}, order);
}

}  // namespace

namespace gf {

ExactSeries small_root_u1(std::size_t order) {
  if (order == 0) return ExactSeries(0);
  const ExactSeries z = ExactSeries::z(order);
  ExactSeries y(order);
  // Each pass fixes one more coefficient.
  for (std::size_t it = 0; it < order; ++it) y = z * (one(order) + y + y * y);
  return y;
}

ExactSeries motzkin_excursions(std::size_t order) {
  return small_root_u1(order + 1).shifted_down(1);
}

ExactSeries motzkin_meanders(std::size_t order) {
  const ExactSeries e = motzkin_excursions(order);
  return e / (one(order) - e.shifted_up(1));
}

ExactSeries catastrophe_excursions(std::size_t order) {
  const ExactSeries e = motzkin_excursions(order);
  const ExactSeries m = motzkin_meanders(order);
  return e / (one(order) - m.shifted_up(1));
}

ExactSeries half_pyramids(std::size_t order) { return motzkin_excursions(order).shifted_up(1); }

BiSeries pyramids(std::size_t order) { return pyramids_from(half_pyramids(order)); }

TriSeries stacked(std::size_t order) { return stacked_from(pyramids(order)); }

}  // namespace gf

namespace closed_form {

ExactSeries small_root_u1(std::size_t order) {
  const std::size_t k = order + 1;
  ExactSeries num = linear(1, -1, k) - sqrt(discriminant(k));
  return num.shifted_down(1) * Rational(1, 2);
}

ExactSeries half_pyramids(std::size_t order) {
  const std::size_t k = order + 1;
  const ExactSeries disc = linear(1, 1, k) * linear(1, -3, k);
  ExactSeries num = linear(1, -1, k) - sqrt(disc);
  return num.shifted_down(1) * Rational(1, 2);
}

ExactSeries motzkin_meanders(std::size_t order) {
  const std::size_t k = order + 1;
  ExactSeries num = linear(1, -3, k) - sqrt(discriminant(k));
  // 6z^2 - 2z = z * (-2 + 6z)
  return num.shifted_down(1) / linear(-2, 6, order);
}

ExactSeries catastrophe_excursions(std::size_t order) {
  const std::size_t k = order + 1;
  const ExactSeries u1 = small_root_u1(k);
  ExactSeries num = (u1 * linear(1, -3, k)).shifted_down(1);
  ExactSeries den = one(order) + (u1.truncated(order) - ExactSeries::constant(4, order)).shifted_up(1);
  return num / den;
}

ExactSeries pyramids_at_one(std::size_t order) {
  const ExactSeries ratio = linear(1, 1, order) / linear(1, -3, order);
  return (sqrt(ratio) - one(order)) * Rational(1, 2);
}

ExactSeries stacked_at_one(std::size_t order) {
  const std::size_t k = order + 1;
  const ExactSeries root = sqrt(linear(1, -3, k) * linear(1, 1, k));
  ExactSeries num = linear(1, -2, k) * linear(1, -3, k) - linear(1, -4, k) * root;
  // 2z(2 - 7z) = z * (4 - 14z)
  return num.shifted_down(1) / linear(4, -14, order);
}

}  // namespace closed_form

// ---------------------------------------------------------------------------
// Identity checks

IdentityInputs build_identity_inputs(std::size_t order) {
  IdentityInputs in;
  in.order = order;
  in.u1_fixpoint = gf::small_root_u1(order);
  in.u1_closed = closed_form::small_root_u1(order);
  in.motzkin = gf::motzkin_excursions(order);
  in.half_pyramids = closed_form::half_pyramids(order);
  in.meanders_closed = closed_form::motzkin_meanders(order);
  const ExactSeries meanders = in.motzkin / (one(order) - in.motzkin.shifted_up(1));
  in.ecat = in.motzkin / (one(order) - meanders.shifted_up(1));
  in.ecat_closed = closed_form::catastrophe_excursions(order);
  in.pyramids_one_closed = closed_form::pyramids_at_one(order);
  in.stacked_one_closed = closed_form::stacked_at_one(order);
  in.pyramids = pyramids_from(in.half_pyramids);
  in.stacked = stacked_from(in.pyramids);
  return in;
}

namespace {

IdentityResult compare(std::string name, const ExactSeries& lhs, const ExactSeries& rhs) {
  IdentityResult r{std::move(name), true, first_mismatch(lhs, rhs)};
  r.passed = !r.first_mismatch.has_value() && lhs.order() == rhs.order();
  return r;
}

IdentityResult compare(std::string name, const BiSeries& lhs, const BiSeries& rhs) {
  IdentityResult r{std::move(name), true, std::nullopt};
  const std::size_t k = std::min(lhs.order(), rhs.order());
  for (std::size_t n = 0; n < k && !r.first_mismatch; ++n) {
    if (lhs.row(n) != rhs.row(n)) r.first_mismatch = n;
  }
  r.passed = !r.first_mismatch.has_value() && lhs.order() == rhs.order();
  return r;
}

}  // namespace

std::vector<IdentityResult> check_identities(const IdentityInputs& in) {
  const std::size_t k = in.order;
  std::vector<IdentityResult> out;
  out.push_back(compare("Q = z*E_M", in.half_pyramids, in.motzkin.shifted_up(1)));
  out.push_back(compare("P(z,u) = z*E_M/(1-u*z*E_M)", in.pyramids, shifted_meander_table(in.motzkin)));
  out.push_back(compare("M_M = E_M/(1-z*E_M)", in.meanders_closed,
                        in.motzkin / (one(k) - in.motzkin.shifted_up(1))));
  out.push_back(compare("S(z,1,1) = z*E_cat", in.stacked.specialize(1, 1), in.ecat.shifted_up(1)));
  out.push_back(compare("u1 fixpoint = u1 closed form", in.u1_fixpoint, in.u1_closed));
  out.push_back(compare("E_cat closed form = E_M/(1-z*M_M)", in.ecat_closed, in.ecat));
  out.push_back(compare("P(z,1) closed form", in.pyramids_one_closed, in.pyramids.specialize(1)));
  out.push_back(compare("S(z) closed form", in.stacked_one_closed, in.stacked.specialize(1, 1)));

  IdentityResult integral{"integral coefficients", true, std::nullopt};
  for (const ExactSeries* s : {&in.u1_fixpoint, &in.u1_closed, &in.motzkin, &in.half_pyramids,
                               &in.meanders_closed, &in.ecat, &in.ecat_closed,
                               &in.pyramids_one_closed, &in.stacked_one_closed}) {
    for (std::size_t i = 0; i < s->order(); ++i) {
      if ((*s)[i].get_den() != 1 || (*s)[i] < 0) {
        if (!integral.first_mismatch || i < *integral.first_mismatch) integral.first_mismatch = i;
      }
    }
  }
  integral.passed = !integral.first_mismatch && in.pyramids.is_integral() && in.stacked.is_integral();
  out.push_back(integral);
  return out;
}

std::vector<IdentityResult> check_identities(std::size_t order) {
  return check_identities(build_identity_inputs(order));
}

}  // namespace polyheap
