#include "polyheap/io.hpp"

#include <cctype>

#include "polyheap/error.hpp"

namespace polyheap {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool looks_like_tokens(std::string_view s) {
  for (char c : s)
    if (c != 'U' && c != 'F' && c != 'D' && c != 'C') return false;
  return true;
}

}  // namespace

std::string rational_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Json to_json(const CatPath& p) { return Json{{"tokens", p.tokens}}; }

Json to_json(const Heap& h) {
  Json dimers = Json::array();
  const Heap c = h.canonical();
  for (const Dimer& d : c.dimers()) dimers.push_back({{"pos", d.pos}, {"level", d.level}});
  return Json{{"dimers", dimers}};
}

Json to_json(const Animal& a) {
  Json cells = Json::array();
  for (const Cell& c : a.cells()) cells.push_back({c.i, c.j});
  return Json{{"cells", cells}};
}

Json to_json(const ExactSeries& s) {
  Json out = Json::array();
  for (const Rational& c : s.coefficients()) out.push_back(rational_string(c));
  return out;
}

Json to_json(const BiSeries& s) {
  Json out = Json::array();
  for (std::size_t n = 0; n < s.order(); ++n) {
    Json row = Json::array();
    for (const Rational& c : s.row(n)) row.push_back(rational_string(c));
    out.push_back(row);
  }
  return out;
}

Json to_json(const TriSeries& s) {
  Json out = Json::array();
  for (std::size_t n = 0; n < s.order(); ++n) {
    Json plane = Json::array();
    for (std::size_t j = 0; j <= n; ++j) {
      Json row = Json::array();
      for (std::size_t r = 0; r <= n; ++r) row.push_back(rational_string(s.at(n, j, r)));
      plane.push_back(row);
    }
    out.push_back(plane);
  }
  return out;
}

Json to_json(const StatReport& r) {
  Json j{{"statistic", r.statistic},
         {"n", r.n},
         {"estimator", std::string(estimator_name(r.kind))},
         {"mean", r.mean},
         {"normalized", r.normalized},
         {"target", rational_string(r.target)},
         {"relative_deviation", r.relative_deviation}};
  if (r.kind == Estimator::Sampled) {
    j["seed"] = r.seed;
    j["samples"] = r.samples;
    j["std_error"] = r.std_error;
  } else if (r.kind == Estimator::Exhaustive) {
    j["objects"] = r.samples;
  }
  if (r.exact) j["exact"] = rational_string(*r.exact);
  if (r.min) j["min"] = *r.min;
  if (r.max) j["max"] = *r.max;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

Json to_json(const GrowthReport& g) {
  Json rows = Json::array();
  for (const GrowthRow& r : g.rows) rows.push_back({{"n", r.n}, {"ratio", r.ratio}, {"amplitude", r.amplitude}});
  return Json{{"rows", rows},
              {"ratio_increasing", g.ratio_increasing},
              {"amplitude_decreasing", g.amplitude_decreasing}};
}

Json to_json(const std::vector<IdentityResult>& results) {
  Json out = Json::array();
  for (const IdentityResult& r : results) {
    Json j{{"identity", r.name}, {"passed", r.passed}};
    if (r.first_mismatch) j["first_mismatch"] = *r.first_mismatch;
    out.push_back(j);
  }
  return out;
}

std::string_view kind_name(ObjectKind k) {
  switch (k) {
    case ObjectKind::Path: return "path";
    case ObjectKind::Heap: return "heap";
    case ObjectKind::Animal: return "animal";
  }
  return "?";
}

ObjectKind parse_kind(std::string_view name) {
  if (name == "path") return ObjectKind::Path;
  if (name == "heap") return ObjectKind::Heap;
  if (name == "animal") return ObjectKind::Animal;
  bad("unknown object kind '" + std::string(name) + "'");
}

ObjectKind kind_of(const Object& o) { return static_cast<ObjectKind>(o.index()); }

CatPath path_from_json(const Json& j) {
  if (j.is_string()) return CatPath{j.get<std::string>()};
  if (j.is_object() && j.contains("tokens") && j["tokens"].is_string()) return CatPath{j["tokens"].get<std::string>()};
  bad("path must be a string or {\"tokens\": string}");
}

Heap heap_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dimers") || !j["dimers"].is_array()) bad("heap needs a \"dimers\" array");
  std::vector<Dimer> dimers;
  for (const Json& d : j["dimers"]) {
    if (!d.is_object() || !d.contains("pos") || !d.contains("level")) bad("dimer needs \"pos\" and \"level\"");
    dimers.push_back({as_int(d["pos"], "pos"), as_int(d["level"], "level")});
  }
  return Heap(std::move(dimers)).canonical();
}

Animal animal_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("cells") || !j["cells"].is_array()) bad("animal needs a \"cells\" array");
  std::vector<Cell> cells;
  for (const Json& c : j["cells"]) {
    if (!c.is_array() || c.size() != 2) bad("cell must be [i, j]");
    cells.push_back({as_int(c[0], "cell coordinate"), as_int(c[1], "cell coordinate")});
  }
  return Animal(std::move(cells));
}

Object parse_object(std::string_view text) {
  const std::string_view s = trim(text);
  if (looks_like_tokens(s)) return CatPath{std::string(s)};
  Json j = Json::parse(s.begin(), s.end(), nullptr, false);
  if (j.is_discarded()) bad("input is neither a token string nor JSON");
  if (j.is_string()) return CatPath{j.get<std::string>()};
  if (j.is_object()) {
    if (j.contains("tokens")) return path_from_json(j);
    if (j.contains("dimers")) return heap_from_json(j);
    if (j.contains("cells")) return animal_from_json(j);
  }
  bad("JSON input has none of \"tokens\", \"dimers\", \"cells\"");
}

}  // namespace polyheap
