#include "polyheap/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "polyheap/animals.hpp"
#include "polyheap/bijection.hpp"
#include "polyheap/error.hpp"
#include "polyheap/io.hpp"
#include "polyheap/paths.hpp"
#include "polyheap/render.hpp"
#include "polyheap/series.hpp"
#include "polyheap/stats.hpp"
#include "polyheap/verify.hpp"

namespace polyheap {

namespace {

enum class Family { Motzkin, Cat, Cat0, HalfPyramid, Pyramid, Stacked, DirectedAnimal };

const std::map<std::string, Family> kFamilies{
    {"motzkin", Family::Motzkin},       {"cat", Family::Cat},         {"cat0", Family::Cat0},
    {"half-pyramid", Family::HalfPyramid}, {"pyramid", Family::Pyramid}, {"stacked", Family::Stacked},
    {"directed-animal", Family::DirectedAnimal}};

PathMode mode_of(Family f) {
  switch (f) {
    case Family::Motzkin:
    case Family::HalfPyramid: return PathMode::Plain;
    case Family::Cat0:
    case Family::Pyramid:
    case Family::DirectedAnimal: return PathMode::Cat0;
    case Family::Cat:
    case Family::Stacked: break;
  }
  return PathMode::Cat;
}

// Heap and animal families are indexed by size, one more than path length.
bool sized(Family f) { return f != Family::Motzkin && f != Family::Cat && f != Family::Cat0; }

std::string read_input(const std::string& name, std::istream& in) {
  std::ostringstream s;
  if (name == "-") {
    s << in.rdbuf();
  } else {
    std::ifstream f(name);
    if (!f) throw Error(ErrorCode::InvalidInput, "cannot read '" + name + "'");
    s << f.rdbuf();
  }
  return s.str();
}

void write_output(const std::string& name, const std::string& text, std::ostream& out) {
  if (name == "-") {
    out << text;
    return;
  }
  std::ofstream f(name);
  if (!f) throw Error(ErrorCode::InvalidInput, "cannot write '" + name + "'");
  f << text;
}

// One object, or one per nonempty line when the whole text is not a single one.
std::vector<Object> read_objects(const std::string& text) {
  try {
    return {parse_object(text)};
  } catch (const Error&) {
    if (text.find('\n') == std::string::npos) throw;
  }
  std::vector<Object> out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_object(line));
  }
  return out;
}

std::string emit(const Object& o) {
  if (const auto* p = std::get_if<CatPath>(&o)) return p->tokens;
  if (const auto* h = std::get_if<Heap>(&o)) return to_json(*h).dump();
  return to_json(std::get<Animal>(o)).dump();
}

Heap heap_of(const Object& o) {
  switch (kind_of(o)) {
    case ObjectKind::Path: return phi_inv(std::get<CatPath>(o).tokens);
    case ObjectKind::Heap: return std::get<Heap>(o).canonical();
    case ObjectKind::Animal: break;
  }
  return animal_to_heap(std::get<Animal>(o));
}

Object convert(const Object& o, ObjectKind from, ObjectKind to) {
  if (kind_of(o) != from) {
    throw Error(ErrorCode::InvalidInput, "input is a " + std::string(kind_name(kind_of(o))) + ", not a " +
                                             std::string(kind_name(from)));
  }
  if (from == ObjectKind::Animal && to != ObjectKind::Animal) {
    const Animal& a = std::get<Animal>(o);
    const Heap h = animal_to_heap(a);
    if (!classify(h).stacked || !(heap_to_animal(h) == a)) {
      throw Error(ErrorCode::NotStackedDirected, "animal is not a stacked directed animal");
    }
  }
  switch (to) {
    case ObjectKind::Path:
      if (from == ObjectKind::Path) {
        validate(std::get<CatPath>(o).tokens, PathMode::Cat);
        return o;
      }
      return phi(heap_of(o));
    case ObjectKind::Heap: return heap_of(o);
    case ObjectKind::Animal:
      if (from == ObjectKind::Animal) return o;
      return heap_to_animal(heap_of(o));
  }
  return o;
}

std::string report_line(const StatReport& r) {
  std::ostringstream s;
  s << std::left << std::setw(18) << r.statistic << std::setw(11) << estimator_name(r.kind) << "n=" << std::setw(6)
    << r.n << " mean=" << std::setprecision(8) << r.mean;
  if (r.exact) s << " (" << rational_string(*r.exact).substr(0, 40) << (rational_string(*r.exact).size() > 40 ? "..." : "") << ")";
  if (r.kind == Estimator::Sampled) s << " se=" << r.std_error;
  s << " per-n=" << r.normalized << " target=" << rational_string(r.target);
  if (r.statistic == "width") s << ".." << rational_string(constants().width_upper);
  s << " rel-dev=" << r.relative_deviation;
  if (r.min) s << " min=" << *r.min << " max=" << *r.max;
  for (const auto& note : r.notes) s << "\n    " << note;
  return s.str();
}

std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? " " : "") + rational_string(v[k]);
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Motzkin paths with catastrophes, heaps of dimers and directed animals", "polyheap"};
  app.require_subcommand(1);
  std::vector<std::string> family_names;
  for (const auto& [name, f] : kFamilies) family_names.push_back(name);

  int n = 0;
  std::string family = "cat";
  auto* count = app.add_subcommand("count", "exact number of objects of one size");
  count->add_option("--n", n, "path length, or size for heaps and animals")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--class", family, "object class")->check(CLI::IsMember(family_names));

  std::string which;
  std::size_t order = 0;
  bool json = false;
  auto* series = app.add_subcommand("series", "generating-function coefficients");
  series->add_option("--which", which, "E, M, Ecat, Q, P or S")->required()->check(CLI::IsMember({"E", "M", "Ecat", "Q", "P", "S"}));
  series->add_option("--order", order, "number of coefficients (default $POLYHEAP_ORDER or 64)")->check(CLI::PositiveNumber);
  series->add_flag("--json", json, "print JSON");

  long long limit = -1;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list all objects of one size as JSON lines");
  enumerate_cmd->add_option("--n", n, "path length, or size for heaps and animals")->required()->check(CLI::NonNegativeNumber);
  enumerate_cmd->add_option("--class", family, "object class")->check(CLI::IsMember(family_names));
  enumerate_cmd->add_option("--limit", limit, "stop after this many objects");

  std::string input = "-", from, to;
  auto* map = app.add_subcommand("map", "convert between paths, heaps and animals");
  map->add_option("--input", input, "file or - for stdin");
  map->add_option("--from", from, "path, heap or animal")->required()->check(CLI::IsMember({"path", "heap", "animal"}));
  map->add_option("--to", to, "path, heap or animal")->required()->check(CLI::IsMember({"path", "heap", "animal"}));

  int samples = 0;
  std::uint64_t seed = 0;
  std::string emit_kind = "paths";
  bool with_stats = false;
  auto* sample = app.add_subcommand("sample", "uniform random objects");
  sample->add_option("--n", n, "path length, or size for heaps and animals")->required()->check(CLI::NonNegativeNumber);
  sample->add_option("--count", samples, "number of samples")->required()->check(CLI::PositiveNumber);
  sample->add_option("--seed", seed, "random seed")->required();
  sample->add_option("--emit", emit_kind, "paths, heaps or animals")->check(CLI::IsMember({"paths", "heaps", "animals"}));
  sample->add_flag("--stats", with_stats, "append a summary line");

  bool exact = false;
  auto* stats = app.add_subcommand("stats", "means of path and heap statistics");
  stats->add_option("--n", n, "path length (widths are for heaps of size n+1)")->required()->check(CLI::PositiveNumber);
  auto* exact_flag = stats->add_flag("--exact", exact, "exact dynamic programming and exhaustive widths");
  auto* samples_opt = stats->add_option("--samples", samples, "number of samples")->check(CLI::Range(2, 1 << 30));
  auto* seed_opt = stats->add_option("--seed", seed, "random seed");
  stats->add_flag("--json", json, "print JSON");
  exact_flag->excludes(samples_opt);
  samples_opt->needs(seed_opt);

  std::string suite = "all";
  int max_n = 9;
  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  verify->add_option("--suite", suite, "counts, roundtrip, identities, bounds, sampler or all")
      ->check(CLI::IsMember({"counts", "roundtrip", "identities", "bounds", "sampler", "all"}));
  verify->add_option("--max-n", max_n, "scale of the exhaustive checks (9 = full)")->check(CLI::Range(1, 9));

  std::string format = "svg", out_file = "-";
  auto* render = app.add_subcommand("render", "draw a path, heap or animal");
  render->add_option("--input", input, "file or - for stdin");
  render->add_option("--format", format, "svg or ascii")->check(CLI::IsMember({"svg", "ascii"}));
  render->add_option("--out", out_file, "file or - for stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (count->parsed()) {
      const Family f = kFamilies.at(family);
      if (sized(f) && n == 0) {
        out << 0 << '\n';
      } else {
        out << count_table(sized(f) ? n - 1 : n, mode_of(f)).excursions().get_str() << '\n';
      }
    } else if (series->parsed()) {
      if (order == 0) order = default_series_order();
      if (which == "P" || which == "S") {
        if (which == "P") {
          const BiSeries p = gf::pyramids(order);
          if (json) {
            out << to_json(p).dump() << '\n';
          } else {
            for (std::size_t k = 0; k < p.order(); ++k) out << "z^" << k << ": " << join(p.row(k)) << '\n';
          }
        } else {
          const TriSeries s = gf::stacked(order);
          if (json) {
            out << to_json(s).dump() << '\n';
          } else {
            for (std::size_t k = 0; k < s.order(); ++k) {
              for (std::size_t j = 0; j <= k; ++j) {
                std::vector<Rational> row;
                for (std::size_t r = 0; r <= k; ++r) row.push_back(s.at(k, j, r));
                out << "z^" << k << " u^" << j << ": " << join(row) << '\n';
              }
            }
          }
        }
      } else {
        ExactSeries s;
        if (which == "E") s = gf::motzkin_excursions(order);
        else if (which == "M") s = gf::motzkin_meanders(order);
        else if (which == "Ecat") s = gf::catastrophe_excursions(order);
        else s = gf::half_pyramids(order);
        if (json) out << to_json(s).dump() << '\n';
        else out << join(s.coefficients()) << '\n';
      }
    } else if (enumerate_cmd->parsed()) {
      const Family f = kFamilies.at(family);
      long long emitted = 0;
      auto more = [&] { return limit < 0 || emitted < limit; };
      if (f == Family::DirectedAnimal) {
        for (const Animal& a : enumerate_directed_animals(n)) {
          if (!more()) break;
          out << to_json(a).dump() << '\n';
          ++emitted;
        }
      } else if (!sized(f)) {
        for (const CatPath& p : enumerate(n, mode_of(f))) {
          if (!more()) break;
          out << to_json(p).dump() << '\n';
          ++emitted;
        }
      } else if (n >= 1) {
        for (const CatPath& p : enumerate(n - 1, mode_of(f))) {
          if (!more()) break;
          out << to_json(phi_inv(p.tokens)).dump() << '\n';
          ++emitted;
        }
      }
    } else if (map->parsed()) {
      for (const Object& o : read_objects(read_input(input, in))) {
        out << emit(convert(o, parse_kind(from), parse_kind(to))) << '\n';
      }
    } else if (sample->parsed()) {
      const bool paths = emit_kind == "paths";
      if (!paths && n == 0) throw Error(ErrorCode::InvalidInput, "heaps and animals have size at least 1");
      const int length = paths ? n : n - 1;
      const UniformSampler sampler(length, PathMode::Cat);
      double sum_width = 0, sum_cat = 0, sum_down = 0, sum_mins = 0;
      for (int k = 0; k < samples; ++k) {
        const CatPath p = sampler.sample(seed + static_cast<std::uint64_t>(k));
        const Heap h = phi_inv_streaming(p.tokens);
        if (paths) out << to_json(p).dump() << '\n';
        else if (emit_kind == "heaps") out << to_json(h).dump() << '\n';
        else out << to_json(heap_to_animal(h)).dump() << '\n';
        if (with_stats) {
          const PathStats s = validate(p.tokens, PathMode::Cat);
          sum_width += width(h);
          sum_cat += static_cast<double>(s.cumulative_catastrophe_size);
          sum_down += s.down;
          sum_mins += s.high_cat_count + 1;
        }
      }
      if (with_stats) {
        const double m = samples;
        Json summary{{"samples", samples},
                     {"path_length", length},
                     {"mean_catastrophe_total", sum_cat / m},
                     {"mean_se_count", sum_down / m},
                     {"mean_minimal_dimers", sum_mins / m},
                     {"mean_width", sum_width / m}};
        out << Json{{"summary", summary}}.dump() << '\n';
      }
    } else if (stats->parsed()) {
      std::vector<StatReport> reports;
      if (samples_opt->count() > 0) {
        const WidthSampling sampling{seed, samples};
        reports = sampled_path_reports(n, sampling);
        reports.push_back(width_stats(n + 1, sampling));
      } else {
        reports = {expected_catastrophe_total(n), expected_se_count(n), expected_minimal_dimers(n)};
        if (n + 1 <= kMaxEnumeratedHeapSize) reports.push_back(width_stats(n + 1));
      }
      const GrowthReport g = growth_check(n);
      if (json) {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        out << Json{{"reports", arr}, {"growth", Json{{"n", g.rows.back().n}, {"ratio", g.rows.back().ratio}, {"amplitude", g.rows.back().amplitude}}}}.dump(2) << '\n';
      } else {
        for (const auto& r : reports) out << report_line(r) << '\n';
        out << "growth            n=" << g.rows.back().n << " ratio=" << std::setprecision(8) << g.rows.back().ratio
            << " (7/2) amplitude=" << g.rows.back().amplitude << " (3/8)\n";
      }
    } else if (verify->parsed()) {
      bool ok = true;
      for (const CheckResult& r : run_suite(suite, max_n)) {
        out << format_result(r) << '\n';
        ok = ok && r.passed;
      }
      out << (ok ? "all checks passed" : "some checks FAILED") << '\n';
      return ok ? kExitOk : kExitVerifyFailed;
    } else if (render->parsed()) {
      std::ostringstream drawn;
      for (const Object& o : read_objects(read_input(input, in))) {
        drawn << (format == "svg" ? render_svg(o) : render_ascii(o));
      }
      write_output(out_file, drawn.str(), out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const Json::exception& e) {
    err << "error: " << error_name(ErrorCode::InvalidInput) << ": " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace polyheap
