#pragma once

// Truncated power series with exact rational coefficients, and the
// generating functions of Motzkin paths (with catastrophes) and of
// pyramids / stacked pyramids of dimers.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace polyheap {

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr std::size_t kDefaultSeriesOrder = 64;

/// Default truncation order, taken from POLYHEAP_ORDER when it is set to a
/// positive integer.
std::size_t default_series_order();

/// Power series in z truncated to `order()` coefficients (z^0 .. z^(order-1)).
class ExactSeries {
 public:
  explicit ExactSeries(std::size_t order = 0);
  ExactSeries(std::vector<Rational> coefficients, std::size_t order);

  static ExactSeries constant(const Rational& c, std::size_t order);
  static ExactSeries z(std::size_t order);
  static ExactSeries polynomial(const std::vector<Rational>& coefficients, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size(); }
  const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
  Rational& operator[](std::size_t k) { return coeffs_.at(k); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  /// Same series with fewer retained coefficients.
  ExactSeries truncated(std::size_t order) const;
  /// Multiply by z^k; order is kept.
  ExactSeries shifted_up(std::size_t k) const;
  /// Divide by z^k; the low k coefficients must vanish. Order drops by k.
  ExactSeries shifted_down(std::size_t k) const;

  bool is_integral() const;

  ExactSeries& operator+=(const ExactSeries& other);
  ExactSeries& operator-=(const ExactSeries& other);
  ExactSeries& operator*=(const Rational& scalar);

  friend ExactSeries operator+(ExactSeries a, const ExactSeries& b) { return a += b; }
  friend ExactSeries operator-(ExactSeries a, const ExactSeries& b) { return a -= b; }
  friend ExactSeries operator*(ExactSeries a, const Rational& s) { return a *= s; }
  friend ExactSeries operator*(const ExactSeries& a, const ExactSeries& b);
  friend ExactSeries operator/(const ExactSeries& a, const ExactSeries& b);
  friend bool operator==(const ExactSeries& a, const ExactSeries& b) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Inverse of a series with nonzero constant term.
ExactSeries inverse(const ExactSeries& a);
/// Square root of a series with constant term 1, via Newton iteration.
ExactSeries sqrt(const ExactSeries& a);
ExactSeries power(const ExactSeries& a, unsigned exponent);

enum class SeriesOp { Add, Mul, Div, Sqrt };
/// Dispatch form used by the CLI and tests; `b` is ignored for Sqrt.
ExactSeries ps_arith(const ExactSeries& a, const ExactSeries& b, SeriesOp op);

/// Index of the first coefficient where the two series differ (compared up
/// to the smaller order), or nullopt when they agree.
std::optional<std::size_t> first_mismatch(const ExactSeries& a, const ExactSeries& b);

/// Coefficient table c[n][j] of  sum c[n][j] z^n u^j,  with j <= n.
class BiSeries {
 public:
  explicit BiSeries(std::size_t order = 0);

  std::size_t order() const noexcept { return table_.size(); }
  const Rational& at(std::size_t n, std::size_t j) const { return table_.at(n).at(j); }
  Rational& at(std::size_t n, std::size_t j) { return table_.at(n).at(j); }
  const std::vector<Rational>& row(std::size_t n) const { return table_.at(n); }

  ExactSeries specialize(const Rational& u) const;
  bool is_integral() const;

  friend bool operator==(const BiSeries& a, const BiSeries& b) = default;

 private:
  std::vector<std::vector<Rational>> table_;
};

/// Coefficient table c[n][j][r] of  sum c z^n u^j t^r,  with j, r <= n.
class TriSeries {
 public:
  explicit TriSeries(std::size_t order = 0);

  std::size_t order() const noexcept { return table_.size(); }
  const Rational& at(std::size_t n, std::size_t j, std::size_t r) const {
    return table_.at(n).at(j).at(r);
  }
  Rational& at(std::size_t n, std::size_t j, std::size_t r) { return table_.at(n).at(j).at(r); }

  ExactSeries specialize(const Rational& u, const Rational& t) const;
  bool is_integral() const;

 private:
  std::vector<std::vector<std::vector<Rational>>> table_;
};

/// Motzkin step set {-1, 0, +1}: characteristic polynomial u^-1 + 1 + u.
struct StepSet {
  std::vector<int> steps{-1, 0, 1};
  int c = 1;  // -min step
  int d = 1;  // max step
};

namespace gf {

/// Small root u1(z) of 1 - z(1/u + 1 + u) = 0, by the fixpoint y <- z(1 + y + y^2).
ExactSeries small_root_u1(std::size_t order);
/// E_M(z) = u1(z)/z, the Motzkin numbers.
ExactSeries motzkin_excursions(std::size_t order);
/// M_M(z,1), Motzkin meanders ending anywhere.
ExactSeries motzkin_meanders(std::size_t order);
/// E_cat(z) = E_M / (1 - z M_M): excursions with catastrophes.
ExactSeries catastrophe_excursions(std::size_t order);
/// Q(z) = z E_M(z), strict half-pyramids by size.
ExactSeries half_pyramids(std::size_t order);
/// P(z,u) = Q / (1 - uQ); u marks right width.
BiSeries pyramids(std::size_t order);
/// S(z,u,t) = t P(z,u) / (1 - t P(z,1)^2); u marks right width of the
/// rightmost factor, t the number of minimal dimers.
TriSeries stacked(std::size_t order);

}  // namespace gf

/// The same generating functions evaluated from their closed forms through
/// exact square roots.
namespace closed_form {

ExactSeries small_root_u1(std::size_t order);        // (1 - z - sqrt(1-2z-3z^2)) / 2z
ExactSeries half_pyramids(std::size_t order);        // (1 - z - sqrt((1+z)(1-3z))) / 2z
ExactSeries motzkin_meanders(std::size_t order);     // (1 - 3z - sqrt(1-2z-3z^2)) / (6z^2 - 2z)
ExactSeries catastrophe_excursions(std::size_t order);  // u1 (1-3z) / (z (1 + (u1 - 4) z))
ExactSeries pyramids_at_one(std::size_t order);      // (sqrt((1+z)/(1-3z)) - 1) / 2
ExactSeries stacked_at_one(std::size_t order);       // ((1-2z)(1-3z) - (1-4z) sqrt((1-3z)(1+z))) / 2z(2-7z)

}  // namespace closed_form

struct IdentityResult {
  std::string name;
  bool passed = false;
  std::optional<std::size_t> first_mismatch;  // z-power of the first differing coefficient
};

/// Every series the identity checks consume. Built independently so a test
/// can corrupt one input and watch the matching identity fail.
struct IdentityInputs {
  std::size_t order = 0;
  ExactSeries u1_fixpoint;
  ExactSeries u1_closed;
  ExactSeries motzkin;           // E_M from the fixpoint
  ExactSeries half_pyramids;     // Q from its closed form
  ExactSeries meanders_closed;   // M_M closed form
  ExactSeries ecat;              // E_cat = E_M / (1 - z M_M)
  ExactSeries ecat_closed;
  ExactSeries pyramids_one_closed;
  ExactSeries stacked_one_closed;
  BiSeries pyramids;             // built from Q
  TriSeries stacked;             // built from P
};

IdentityInputs build_identity_inputs(std::size_t order);
std::vector<IdentityResult> check_identities(const IdentityInputs& inputs);
std::vector<IdentityResult> check_identities(std::size_t order);

}  // namespace polyheap
