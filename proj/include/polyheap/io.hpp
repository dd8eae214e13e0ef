#pragma once

// JSON and text forms of paths, heaps, animals, series and reports.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "polyheap/animals.hpp"
#include "polyheap/heaps.hpp"
#include "polyheap/paths.hpp"
#include "polyheap/series.hpp"
#include "polyheap/stats.hpp"

namespace polyheap {

using Json = nlohmann::json;

/// "p" for integers, "p/q" otherwise.
std::string rational_string(const Rational& q);

Json to_json(const CatPath& p);          // {"tokens": "..."}
Json to_json(const Heap& h);             // canonical {"dimers": [{"pos","level"}...]}
Json to_json(const Animal& a);           // {"cells": [[i,j]...]}
Json to_json(const ExactSeries& s);      // ["1","2",...]
Json to_json(const BiSeries& s);         // rows indexed by power of z
Json to_json(const TriSeries& s);        // [n][j][r]
Json to_json(const StatReport& r);
Json to_json(const GrowthReport& g);
Json to_json(const std::vector<IdentityResult>& results);

enum class ObjectKind { Path, Heap, Animal };
std::string_view kind_name(ObjectKind k);
/// "path" | "heap" | "animal"; throws InvalidInput.
ObjectKind parse_kind(std::string_view name);

using Object = std::variant<CatPath, Heap, Animal>;
ObjectKind kind_of(const Object& o);

/// Accepts a bare token string, a JSON string, or a JSON object with
/// "tokens", "dimers" or "cells". Throws InvalidInput, or the validation
/// error of the decoded object. Path tokens are not mode-checked here.
Object parse_object(std::string_view text);

CatPath path_from_json(const Json& j);
Heap heap_from_json(const Json& j);
Animal animal_from_json(const Json& j);

}  // namespace polyheap
