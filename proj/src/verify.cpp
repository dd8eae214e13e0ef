#include "polyheap/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include <boost/math/distributions/chi_squared.hpp>

#include "polyheap/animals.hpp"
#include "polyheap/bijection.hpp"
#include "polyheap/error.hpp"
#include "polyheap/paths.hpp"
#include "polyheap/series.hpp"
#include "polyheap/stats.hpp"

namespace polyheap {

namespace {

const std::vector<long> kCat{1, 2, 6, 19, 63, 213, 729, 2513};
const std::vector<long> kPlain{1, 1, 2, 4, 9, 21, 51, 127};
const std::vector<long> kCat0{1, 2, 5, 13, 35, 96, 267, 750};

// Collects failures; keeps the first few messages.
class Tally {
 public:
  void fail(const std::string& what) {
    if (failures_++ < 5) messages_.push_back(what);
  }
  void check(bool ok, const std::function<std::string()>& what) {
    ++checks_;
    if (!ok) fail(what());
  }
  bool ok() const { return failures_ == 0; }
  std::string summary(const std::string& passed_text) const {
    if (ok()) return passed_text + " (" + std::to_string(checks_) + " checks)";
    std::string s = std::to_string(failures_) + " failures of " + std::to_string(checks_);
    for (const auto& m : messages_) s += "; " + m;
    return s;
  }

 private:
  long long checks_ = 0;
  long long failures_ = 0;
  std::vector<std::string> messages_;
};

std::string heap_text(const Heap& h) {
  std::string s = "{";
  const Heap c = h.canonical();
  for (const Dimer& d : c.dimers()) s += "(" + std::to_string(d.pos) + "," + std::to_string(d.level) + ")";
  return s + "}";
}

CheckResult timed(int criterion, std::string name, const std::function<void(CheckResult&)>& body) {
  CheckResult r;
  r.criterion = criterion;
  r.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const Error& e) {
    r.passed = false;
    r.detail = std::string("unexpected error ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

HeapFilter filter_for(PathMode mode) {
  HeapFilter f;
  switch (mode) {
    case PathMode::Plain:
      f.strict = f.half_pyramid = true;
      break;
    case PathMode::Cat0:
      f.strict = f.pyramid = true;
      break;
    case PathMode::Cat:
      f.stacked = true;
      break;
  }
  return f;
}

const std::vector<long>& reference(PathMode mode) {
  switch (mode) {
    case PathMode::Plain: return kPlain;
    case PathMode::Cat0: return kCat0;
    case PathMode::Cat: break;
  }
  return kCat;
}

ExactSeries counting_series(PathMode mode, std::size_t order) {
  switch (mode) {
    case PathMode::Plain: return gf::motzkin_excursions(order);
    case PathMode::Cat0: return gf::pyramids(order + 1).specialize(1).shifted_down(1);
    case PathMode::Cat: break;
  }
  return gf::catastrophe_excursions(order);
}

constexpr PathMode kModes[] = {PathMode::Plain, PathMode::Cat0, PathMode::Cat};

}  // namespace

CheckResult check_path_counts(int max_enum, int max_dp) {
  return timed(1, "path counts", [&](CheckResult& r) {
    Tally t;
    for (PathMode mode : kModes) {
      const std::string m(mode_name(mode));
      const auto dp = excursion_counts(max_dp, mode);
      const CountTable table = count_table(max_dp, mode);
      const ExactSeries series = counting_series(mode, static_cast<std::size_t>(max_dp) + 1);
      const auto& ref = reference(mode);
      for (std::size_t n = 0; n < ref.size(); ++n) {
        t.check(dp[n] == ref[n], [&] { return m + " DP a(" + std::to_string(n) + ") = " + dp[n].get_str(); });
      }
      for (int n = 0; n <= max_dp; ++n) {
        const Integer& a = dp[static_cast<std::size_t>(n)];
        t.check(series[static_cast<std::size_t>(n)] == Rational(a), [&] {
          return m + " series coefficient " + std::to_string(n) + " differs from DP";
        });
        t.check(table.at(n, 0) == a, [&] { return m + " count table disagrees at " + std::to_string(n); });
      }
      for (int n = 0; n <= max_enum; ++n) {
        const std::size_t got = enumerate(n, mode).size();
        t.check(Integer(static_cast<unsigned long>(got)) == dp[static_cast<std::size_t>(n)],
                [&] { return m + " enumeration at n=" + std::to_string(n) + " gives " + std::to_string(got); });
      }
    }
    r.passed = t.ok();
    r.detail = t.summary("enumeration n<=" + std::to_string(max_enum) + ", DP and series n<=" + std::to_string(max_dp) +
                         " agree with the reference prefixes");
  });
}

CheckResult check_heap_counts(int max_size) {
  return timed(2, "heap counts", [&](CheckResult& r) {
    Tally t;
    for (PathMode mode : kModes) {
      const auto dp = excursion_counts(max_size, mode);
      for (int size = 1; size <= max_size; ++size) {
        const std::size_t got = enumerate_heaps(size, filter_for(mode)).size();
        const Integer& want = dp[static_cast<std::size_t>(size) - 1];
        t.check(Integer(static_cast<unsigned long>(got)) == want, [&] {
          return std::string(mode_name(mode)) + " class size " + std::to_string(size) + ": " + std::to_string(got) +
                 " heaps, expected " + want.get_str();
        });
      }
    }
    r.passed = t.ok();
    r.detail = t.summary("half-pyramids, pyramids and stacked heaps of size <=" + std::to_string(max_size) +
                         " match the path counts");
  });
}

CheckResult check_roundtrips(int max_heap_size, int max_path_length) {
  return timed(3, "bijection round trips", [&](CheckResult& r) {
    Tally t;
    for (int size = 1; size <= max_heap_size; ++size) {
      HeapFilter stacked;
      stacked.stacked = true;
      for (const Heap& h : enumerate_heaps(size, stacked)) {
        const CatPath m = phi(h);
        t.check(phi_inv(m.tokens) == h, [&] { return "phi_inv(phi(" + heap_text(h) + ")) != id"; });
        t.check(static_cast<int>(m.size()) == size - 1, [&] { return "length of phi(" + heap_text(h) + ")"; });
        const HeapFlags f = classify(h);
        if (f.pyramid) t.check(psi(h) == m, [&] { return "psi != phi on " + heap_text(h); });
        if (f.half_pyramid) t.check(omega(h) == m, [&] { return "omega != phi on " + heap_text(h); });
      }
    }
    for (int n = 0; n <= max_path_length; ++n) {
      for (const CatPath& p : enumerate(n, PathMode::Cat)) {
        const Heap h = phi_inv(p.tokens);
        t.check(phi(h) == p, [&] { return "phi(phi_inv(" + p.tokens + ")) != id"; });
        t.check(phi_inv_streaming(p.tokens) == h, [&] { return "streaming inverse differs on " + p.tokens; });
        t.check(classify(h).stacked, [&] { return "phi_inv(" + p.tokens + ") not stacked"; });
        if (is_valid(p.tokens, PathMode::Cat0)) {
          t.check(psi_inv(p.tokens) == h, [&] { return "psi_inv != phi_inv on " + p.tokens; });
        }
        if (is_valid(p.tokens, PathMode::Plain)) {
          t.check(omega_inv(p.tokens) == h, [&] { return "omega_inv != phi_inv on " + p.tokens; });
        }
      }
    }
    r.passed = t.ok();
    r.detail = t.summary("heaps of size <=" + std::to_string(max_heap_size) + ", paths of length <=" +
                         std::to_string(max_path_length));
  });
}

CheckResult check_transport(int max_path_length) {
  return timed(4, "statistic transport", [&](CheckResult& r) {
    Tally t;
    for (int n = 0; n <= max_path_length; ++n) {
      for (const CatPath& p : enumerate(n, PathMode::Cat)) {
        const PathStats s = validate(p.tokens, PathMode::Cat);
        const Heap h = phi_inv(p.tokens);
        const Factorization f = pyramidal_factors(h);
        t.check(static_cast<std::size_t>(s.high_cat_count) + 1 == h.minimal_dimers().size(),
                [&] { return p.tokens + ": high catastrophes vs minimal dimers"; });
        std::vector<int> high;
        for (int a : s.catastrophe_altitudes)
          if (a >= 1) high.push_back(a);
        const std::vector<int> gaps(f.gaps.rbegin(), f.gaps.rend());
        t.check(high == gaps, [&] { return p.tokens + ": catastrophe altitudes vs gaps"; });
        for (const Heap& factor : f.factors) {
          const CatPath q = psi(factor);
          const auto cs = std::count(q.tokens.begin(), q.tokens.end(), 'C');
          t.check(cs == right_width(factor), [&] { return "C count of psi vs right width in " + p.tokens; });
        }
      }
    }
    r.passed = t.ok();
    r.detail = t.summary("all cat excursions of length <=" + std::to_string(max_path_length));
  });
}

CheckResult check_series_identities(int order) {
  return timed(5, "series identities", [&](CheckResult& r) {
    Tally t;
    for (const IdentityResult& id : check_identities(static_cast<std::size_t>(order))) {
      t.check(id.passed, [&] {
        return id.name + (id.first_mismatch ? " differs at z^" + std::to_string(*id.first_mismatch) : " failed");
      });
    }
    r.passed = t.ok();
    r.detail = t.summary("order " + std::to_string(order));
  });
}

CheckResult check_animals(int max_animal_size, int max_heap_size) {
  return timed(6, "animals", [&](CheckResult& r) {
    Tally t;
    const auto cat0 = excursion_counts(std::max(max_animal_size, 1), PathMode::Cat0);
    for (int size = 1; size <= max_animal_size; ++size) {
      const auto animals = enumerate_directed_animals(size);
      t.check(Integer(static_cast<unsigned long>(animals.size())) == cat0[static_cast<std::size_t>(size) - 1],
              [&] { return std::to_string(animals.size()) + " directed animals of size " + std::to_string(size); });
      if (size <= static_cast<int>(kCat0.size())) {
        t.check(static_cast<long>(animals.size()) == kCat0[static_cast<std::size_t>(size) - 1],
                [&] { return "directed animals of size " + std::to_string(size) + " vs reference"; });
      }
      for (const Animal& a : animals) {
        t.check(is_directed(a), [&] { return "generated animal is not directed"; });
        const Heap h = animal_to_heap(a);
        const HeapFlags f = classify(h);
        t.check(f.strict && f.pyramid, [&] { return "V of a directed animal is not a strict pyramid"; });
        t.check(heap_to_animal(h) == a, [&] { return "V-bar(V(A)) != A for an animal of size " + std::to_string(size); });
      }
    }
    HeapFilter stacked;
    stacked.stacked = true;
    for (int size = 1; size <= max_heap_size; ++size) {
      for (const Heap& h : enumerate_heaps(size, stacked)) {
        try {
          t.check(animal_to_heap(heap_to_animal(h)) == h, [&] { return "V(V-bar(H)) != H for " + heap_text(h); });
        } catch (const Error& e) {
          t.fail(heap_text(h) + ": " + e.what());
        }
      }
    }
    r.passed = t.ok();
    r.detail = t.summary("directed animals of size <=" + std::to_string(max_animal_size) + ", stacked heaps of size <=" +
                         std::to_string(max_heap_size));
  });
}

CheckResult check_means(int n) {
  return timed(7, "asymptotic means", [&](CheckResult& r) {
    Tally t;
    const AsymptoticConstants& c = constants();
    const PathExpectations e = exact_expectations(n);
    std::ostringstream d;
    auto within = [&](const std::string& what, double value, const Rational& target, double tol) {
      const double dev = std::abs(value - target.get_d()) / target.get_d();
      d << what << "=" << value << " (dev " << dev << ") ";
      t.check(dev <= tol, [&] { return what + " off by " + std::to_string(dev); });
    };
    within("E[S]/n", Rational(e.catastrophe_total / n).get_d(), c.mu_cat, 0.01);
    within("E[X]/n", Rational(e.se_count / n).get_d(), c.mu_se, 0.01);
    within("(E[min]-1)/n", Rational(e.high_cat_count / n).get_d(), c.mu_mindimers, 0.02);
    const GrowthReport g = growth_check(n);
    within("ratio", g.rows.back().ratio, c.growth, 0.01);
    within("amplitude", g.rows.back().amplitude, c.amplitude, 0.02);
    r.passed = t.ok();
    r.detail = t.ok() ? "n=" + std::to_string(n) + ": " + d.str() : t.summary("");
  });
}

CheckResult check_width_bounds(int max_size, int n, int samples, std::uint64_t seed) {
  return timed(8, "width bounds", [&](CheckResult& r) {
    Tally t;
    const WidthInequalityReport w = verify_width_inequalities(max_size);
    t.check(w.violations.empty(), [&] {
      const WidthViolation& v = w.violations.front();
      return std::to_string(w.violations.size()) + " heaps break the bounds, first " + heap_text(v.heap) + " width " +
             std::to_string(v.width) + " not in [" + std::to_string(v.lower) + "," + std::to_string(v.upper) + "]";
    });
    const StatReport s = width_stats(n, WidthSampling{seed, samples});
    const double lo = constants().width_lower.get_d() * n, hi = constants().width_upper.get_d() * n;
    const double margin_lo = (s.mean - lo) / s.std_error, margin_hi = (hi - s.mean) / s.std_error;
    t.check(margin_lo >= 3 && margin_hi >= 3, [&] {
      return "mean width " + std::to_string(s.mean) + " within 3 standard errors of an endpoint";
    });
    std::ostringstream d;
    d << w.checked << " heaps of size <=" << max_size << " within bounds; n=" << n << " mean width/n=" << s.normalized
      << " se/n=" << s.std_error / n << " margins " << margin_lo << " and " << margin_hi << " se";
    r.passed = t.ok();
    r.detail = t.ok() ? d.str() : t.summary("");
  });
}

CheckResult check_sampler(int n, int samples_per_path, std::uint64_t seed) {
  return timed(9, "sampler calibration", [&](CheckResult& r) {
    Tally t;
    const auto paths = enumerate(n, PathMode::Cat);
    const int total = samples_per_path * static_cast<int>(paths.size());
    std::map<std::string, long> freq;
    for (const CatPath& p : paths) freq[p.tokens] = 0;
    const auto samples = sample_uniform(n, PathMode::Cat, seed, total);
    for (const CatPath& p : samples) {
      auto it = freq.find(p.tokens);
      t.check(it != freq.end(), [&] { return "sampled path " + p.tokens + " is not an excursion"; });
      if (it != freq.end()) ++it->second;
    }
    double chi2 = 0;
    for (const auto& [tokens, o] : freq) {
      const double diff = static_cast<double>(o) - samples_per_path;
      chi2 += diff * diff / samples_per_path;
    }
    const double df = static_cast<double>(paths.size()) - 1;
    const boost::math::chi_squared_distribution<double> dist(df);
    const double critical = boost::math::quantile(boost::math::complement(dist, 1e-3));
    t.check(chi2 < critical, [&] { return "chi-square " + std::to_string(chi2) + " >= " + std::to_string(critical); });
    const auto again = sample_uniform(n, PathMode::Cat, seed, std::min(total, 2000));
    t.check(std::equal(again.begin(), again.end(), samples.begin()), [&] { return "same seed gave different samples"; });
    std::ostringstream d;
    d << total << " samples over " << paths.size() << " paths: chi-square " << chi2 << " < " << critical << " (df "
      << df << ", alpha 1e-3); seed reproduces";
    r.passed = t.ok();
    r.detail = t.ok() ? d.str() : t.summary("");
  });
}

std::vector<CheckResult> run_suite(std::string_view suite, int max_n) {
  if (max_n < 1) throw Error(ErrorCode::InvalidInput, "--max-n must be at least 1");
  const int heap_count_max = std::min(8, max_n);
  const int heap_max = std::min(max_n, kMaxEnumeratedHeapSize);
  const int path_max = max_n + 1;
  const int enum_max = max_n + 3;
  const int width_max = max_n + 1;
  const bool all = suite == "all";
  if (!all && suite != "counts" && suite != "roundtrip" && suite != "identities" && suite != "bounds" &&
      suite != "sampler") {
    throw Error(ErrorCode::InvalidInput, "unknown suite '" + std::string(suite) + "'");
  }
  std::vector<CheckResult> out;
  if (all || suite == "counts") {
    out.push_back(check_path_counts(enum_max, 64));
    out.push_back(check_heap_counts(heap_count_max));
  }
  if (all || suite == "roundtrip") {
    out.push_back(check_roundtrips(heap_max, path_max));
    out.push_back(check_transport(path_max));
  }
  if (all || suite == "identities") out.push_back(check_series_identities(30));
  if (all || suite == "roundtrip") out.push_back(check_animals(heap_count_max, heap_max));
  if (all || suite == "bounds") {
    out.push_back(check_means(1000));
    out.push_back(check_width_bounds(width_max, 1001, 2000, kVerifySeed));
  }
  if (all || suite == "sampler") out.push_back(check_sampler(5, 1000, kVerifySeed));
  return out;
}

std::string format_result(const CheckResult& r) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(2);
  s << (r.passed ? "PASS" : "FAIL") << " [" << r.criterion << "] " << r.name << ": " << r.detail << " (" << r.seconds
    << " s)";
  return s.str();
}

}  // namespace polyheap
