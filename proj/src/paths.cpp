#include "polyheap/paths.hpp"

#include <array>
#include <random>
#include <string>

#include "polyheap/error.hpp"

namespace polyheap {

namespace {

constexpr std::array<char, 4> kTokenOrder{'C', 'D', 'F', 'U'};

bool catastrophe_allowed(PathMode mode, int altitude) {
  switch (mode) {
    case PathMode::Plain: return false;
    case PathMode::Cat0: return altitude == 0;
    case PathMode::Cat: return true;
  }
  return false;
}

// Altitude after `token` from `h`, or -1 if the step is not allowed.
int step(char token, int h, PathMode mode) {
  switch (token) {
    case 'U': return h + 1;
    case 'F': return h;
    case 'D': return h >= 1 ? h - 1 : -1;
    case 'C': return catastrophe_allowed(mode, h) ? 0 : -1;
    default: return -1;
  }
}

bool can_finish(int h, int remaining, PathMode mode) {
  if (remaining == 0) return h == 0;
  if (mode == PathMode::Cat) return true;
  return h <= remaining;
}

void enumerate_rec(int n, PathMode mode, std::string& prefix, int h, std::vector<CatPath>& out) {
  const int remaining = n - static_cast<int>(prefix.size());
  if (remaining == 0) {
    out.push_back(CatPath{prefix});
    return;
  }
  for (char t : kTokenOrder) {
    const int next = step(t, h, mode);
    if (next < 0 || !can_finish(next, remaining - 1, mode)) continue;
    prefix.push_back(t);
    enumerate_rec(n, mode, prefix, next, out);
    prefix.pop_back();
  }
}

void check_length(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidInput, "path length must be nonnegative");
}

}  // namespace

std::string_view mode_name(PathMode mode) {
  switch (mode) {
    case PathMode::Plain: return "plain";
    case PathMode::Cat0: return "cat0";
    case PathMode::Cat: return "cat";
  }
  return "?";
}

std::vector<int> altitude_profile(std::string_view tokens) {
  std::vector<int> profile{0};
  profile.reserve(tokens.size() + 1);
  int h = 0;
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    switch (tokens[k]) {
      case 'U': ++h; break;
      case 'F': break;
      case 'D': --h; break;
      case 'C': h = 0; break;
      default:
        throw Error(ErrorCode::UnknownToken,
                    "token '" + std::string(1, tokens[k]) + "' at index " + std::to_string(k));
    }
    profile.push_back(h);
  }
  return profile;
}

PathStats validate(std::string_view tokens, PathMode mode) {
  PathStats stats;
  int h = 0;
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    const char t = tokens[k];
    switch (t) {
      case 'U':
        ++stats.up;
        ++h;
        break;
      case 'F':
        ++stats.flat;
        break;
      case 'D':
        if (h == 0) throw Error(ErrorCode::NegativeAltitude, "D at altitude 0, index " + std::to_string(k));
        ++stats.down;
        --h;
        break;
      case 'C':
        if (!catastrophe_allowed(mode, h)) {
          throw Error(ErrorCode::ForbiddenCatastrophe,
                      "C at altitude " + std::to_string(h) + " in mode " +
                          std::string(mode_name(mode)) + ", index " + std::to_string(k));
        }
        ++stats.cat;
        stats.catastrophe_altitudes.push_back(h);
        stats.cumulative_catastrophe_size += h;
        if (h >= 1) ++stats.high_cat_count;
        h = 0;
        break;
      default:
        throw Error(ErrorCode::UnknownToken, "token '" + std::string(1, t) + "' at index " + std::to_string(k));
    }
  }
  if (h != 0) throw Error(ErrorCode::NonzeroFinalAltitude, "path ends at altitude " + std::to_string(h));
  return stats;
}

bool is_valid(std::string_view tokens, PathMode mode) {
  try {
    validate(tokens, mode);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::vector<CatPath> enumerate(int n, PathMode mode) {
  check_length(n);
  std::vector<CatPath> out;
  std::string prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  enumerate_rec(n, mode, prefix, 0, out);
  return out;
}

// ---------------------------------------------------------------------------

CountTable::CountTable(int n, std::vector<std::vector<Integer>> rows) : n_(n), rows_(std::move(rows)) {}

Integer CountTable::at(int i, int h) const {
  if (i < 0 || i > n_ || h < 0) return 0;
  const auto& row = rows_[static_cast<std::size_t>(i)];
  if (static_cast<std::size_t>(h) >= row.size()) return 0;
  return row[static_cast<std::size_t>(h)];
}

namespace {

// One forward DP step: next[h'] += cur[h] over allowed transitions.
void advance(const std::vector<Integer>& cur, std::vector<Integer>& next, PathMode mode) {
  for (auto& v : next) v = 0;
  const std::size_t width = cur.size();
  for (std::size_t h = 0; h < width; ++h) {
    const Integer& c = cur[h];
    if (c == 0) continue;
    if (h + 1 < next.size()) next[h + 1] += c;
    next[h] += c;
    if (h >= 1) next[h - 1] += c;
    if (catastrophe_allowed(mode, static_cast<int>(h))) next[0] += c;
  }
}

}  // namespace

CountTable count_table(int n, PathMode mode) {
  check_length(n);
  const std::size_t width = static_cast<std::size_t>(n) + 2;
  std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(n) + 1, std::vector<Integer>(width));
  rows[0][0] = 1;
  for (int i = 0; i < n; ++i) advance(rows[static_cast<std::size_t>(i)], rows[static_cast<std::size_t>(i) + 1], mode);
  return CountTable(n, std::move(rows));
}

std::vector<Integer> excursion_counts(int nmax, PathMode mode) {
  check_length(nmax);
  const std::size_t width = static_cast<std::size_t>(nmax) + 2;
  std::vector<Integer> cur(width), next(width);
  cur[0] = 1;
  std::vector<Integer> out{cur[0]};
  for (int i = 0; i < nmax; ++i) {
    advance(cur, next, mode);
    std::swap(cur, next);
    out.push_back(cur[0]);
  }
  return out;
}

// ---------------------------------------------------------------------------

UniformSampler::UniformSampler(int n, PathMode mode) : n_(n), mode_(mode) {
  check_length(n);
  completions_.resize(static_cast<std::size_t>(n) + 1);
  for (int r = 0; r <= n; ++r) {
    // reachable altitudes after n - r steps, plus one for the U lookahead
    auto& row = completions_[static_cast<std::size_t>(r)];
    row.resize(static_cast<std::size_t>(n - r) + 2);
    if (r == 0) {
      row[0] = 1;
      continue;
    }
    const auto& prev = completions_[static_cast<std::size_t>(r) - 1];
    for (std::size_t h = 0; h < row.size(); ++h) {
      Integer& f = row[h];
      for (char t : kTokenOrder) {
        const int next = step(t, static_cast<int>(h), mode);
        if (next >= 0 && static_cast<std::size_t>(next) < prev.size()) f += prev[static_cast<std::size_t>(next)];
      }
    }
  }
}

const Integer& UniformSampler::completions(int remaining, int altitude) const {
  return completions_.at(static_cast<std::size_t>(remaining)).at(static_cast<std::size_t>(altitude));
}

const Integer& UniformSampler::total() const { return completions(n_, 0); }

CatPath UniformSampler::unrank(Integer rank) const {
  if (rank < 0 || rank >= total()) throw Error(ErrorCode::InvalidInput, "rank out of range");
  CatPath path;
  path.tokens.reserve(static_cast<std::size_t>(n_));
  int h = 0;
  for (int i = 0; i < n_; ++i) {
    const int remaining = n_ - i;
    bool chosen = false;
    for (char t : kTokenOrder) {
      const int next = step(t, h, mode_);
      if (next < 0) continue;
      const auto& row = completions_[static_cast<std::size_t>(remaining) - 1];
      if (static_cast<std::size_t>(next) >= row.size()) continue;
      const Integer& w = row[static_cast<std::size_t>(next)];
      if (rank < w) {
        path.tokens.push_back(t);
        h = next;
        chosen = true;
        break;
      }
      rank -= w;
    }
    if (!chosen) throw Error(ErrorCode::InvalidInput, "unrank fell off the completion table");
  }
  return path;
}

namespace {

// Uniform integer in [0, bound) by rejection on the smallest enclosing power of two.
Integer uniform_below(const Integer& bound, std::mt19937_64& rng) {
  const Integer top = bound - 1;
  if (top == 0) return 0;
  const std::size_t bits = mpz_sizeinbase(top.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const std::uint64_t mask = bits % 64 == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << (bits % 64)) - 1;
  std::vector<std::uint64_t> buf(words);
  Integer x;
  do {
    for (auto& w : buf) w = rng();
    buf.back() &= mask;  // most significant word, given the order below
    mpz_import(x.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, buf.data());
  } while (x >= bound);
  return x;
}

}  // namespace

CatPath UniformSampler::sample(std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  return unrank(uniform_below(total(), rng));
}

std::vector<CatPath> sample_uniform(int n, PathMode mode, std::uint64_t seed, int m) {
  if (m < 1) throw Error(ErrorCode::InvalidInput, "sample count must be positive");
  const UniformSampler sampler(n, mode);
  std::vector<CatPath> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) out.push_back(sampler.sample(seed + static_cast<std::uint64_t>(k)));
  return out;
}

// ---------------------------------------------------------------------------

PathExpectations exact_expectations(int n, PathMode mode) {
  check_length(n);
  const std::size_t width = static_cast<std::size_t>(n) + 2;
  struct Cell {
    Integer count, cat_size, downs, high_cats;
  };
  std::vector<Cell> cur(width), next(width);
  cur[0].count = 1;
  for (int i = 0; i < n; ++i) {
    for (auto& c : next) c.count = c.cat_size = c.downs = c.high_cats = 0;
    const std::size_t reach = std::min<std::size_t>(static_cast<std::size_t>(i) + 1, width);
    for (std::size_t h = 0; h < reach; ++h) {
      const Cell& c = cur[h];
      if (c.count == 0) continue;
      auto add = [&](Cell& dst) {
        dst.count += c.count;
        dst.cat_size += c.cat_size;
        dst.downs += c.downs;
        dst.high_cats += c.high_cats;
      };
      if (h + 1 < width) add(next[h + 1]);
      add(next[h]);
      if (h >= 1) {
        add(next[h - 1]);
        next[h - 1].downs += c.count;
      }
      if (catastrophe_allowed(mode, static_cast<int>(h))) {
        add(next[0]);
        if (h >= 1) {
          next[0].cat_size += c.count * static_cast<unsigned long>(h);
          next[0].high_cats += c.count;
        }
      }
    }
    std::swap(cur, next);
  }
  PathExpectations e;
  e.count = cur[0].count;
  e.catastrophe_total = Rational(cur[0].cat_size, cur[0].count);
  e.se_count = Rational(cur[0].downs, cur[0].count);
  e.high_cat_count = Rational(cur[0].high_cats, cur[0].count);
  e.catastrophe_total.canonicalize();
  e.se_count.canonicalize();
  e.high_cat_count.canonicalize();
  return e;
}

}  // namespace polyheap
