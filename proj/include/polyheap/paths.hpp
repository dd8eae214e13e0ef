#pragma once

// Motzkin excursions with catastrophes.
//
// Tokens: U (+1), F (0), D (-1), C (catastrophe: jump to altitude 0 from any
// altitude, including 0). A catastrophe is a distinct step even where it
// coincides geometrically with F (at altitude 0) or D (at altitude 1).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "polyheap/series.hpp"

namespace polyheap {

enum class PathMode {
  Plain,  // no catastrophes: Motzkin excursions
  Cat0,   // catastrophes only at altitude 0
  Cat,    // catastrophes anywhere
};

std::string_view mode_name(PathMode mode);

struct CatPath {
  std::string tokens;

  std::size_t size() const noexcept { return tokens.size(); }
  friend bool operator==(const CatPath&, const CatPath&) = default;
  friend auto operator<=>(const CatPath&, const CatPath&) = default;
};

struct PathStats {
  int up = 0;
  int flat = 0;
  int down = 0;
  int cat = 0;
  std::vector<int> catastrophe_altitudes;
  long long cumulative_catastrophe_size = 0;
  int high_cat_count = 0;  // catastrophes taken at altitude >= 1
};

/// Altitude after each prefix; profile[0] = 0 and profile.size() = n + 1.
/// Throws on tokens outside the alphabet; does not check mode rules.
std::vector<int> altitude_profile(std::string_view tokens);

/// Statistics of a valid excursion; throws NegativeAltitude,
/// ForbiddenCatastrophe, NonzeroFinalAltitude or UnknownToken otherwise.
PathStats validate(std::string_view tokens, PathMode mode);
bool is_valid(std::string_view tokens, PathMode mode);

/// All excursions of length n, in lexicographic order of the token string
/// (C < D < F < U). Independent backtracking search.
std::vector<CatPath> enumerate(int n, PathMode mode);

/// Forward DP c(i, h): number of prefixes of length i ending at altitude h
/// that stay nonnegative and obey the mode.
class CountTable {
 public:
  CountTable(int n, std::vector<std::vector<Integer>> rows);

  int length() const noexcept { return n_; }
  /// 0 for altitudes outside the stored range.
  Integer at(int i, int h) const;
  const Integer& excursions() const { return rows_.at(static_cast<std::size_t>(n_)).at(0); }

 private:
  int n_;
  std::vector<std::vector<Integer>> rows_;
};

CountTable count_table(int n, PathMode mode);

/// a(0..nmax): excursion counts per length, rolling one DP row.
std::vector<Integer> excursion_counts(int nmax, PathMode mode);

/// Uniform sampler over excursions of a fixed length. Holds the backward
/// completion counts f(r, h) (ways to reach altitude 0 in r more steps from
/// altitude h); immutable after construction.
class UniformSampler {
 public:
  UniformSampler(int n, PathMode mode);

  int length() const noexcept { return n_; }
  PathMode mode() const noexcept { return mode_; }
  const Integer& total() const;

  /// Path of the given rank in the lexicographic order, 0 <= rank < total().
  CatPath unrank(Integer rank) const;
  /// Uniform path; the stream is fully determined by `seed`.
  CatPath sample(std::uint64_t seed) const;

 private:
  const Integer& completions(int remaining, int altitude) const;

  int n_;
  PathMode mode_;
  std::vector<std::vector<Integer>> completions_;  // [remaining][altitude]
};

/// m i.i.d. uniform excursions; sample k is drawn with seed + k.
std::vector<CatPath> sample_uniform(int n, PathMode mode, std::uint64_t seed, int m);

struct PathExpectations {
  Integer count;
  Rational catastrophe_total;  // E[S_n]
  Rational se_count;           // E[X_n]
  Rational high_cat_count;     // E[# catastrophes at altitude >= 1]
};

/// Exact means over all excursions of length n, by a DP carrying
/// (count, weighted sum) pairs.
PathExpectations exact_expectations(int n, PathMode mode = PathMode::Cat);

}  // namespace polyheap
