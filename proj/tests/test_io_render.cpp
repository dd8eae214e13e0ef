#include <doctest.h>

#include "polyheap/bijection.hpp"
#include "polyheap/error.hpp"
#include "polyheap/io.hpp"
#include "polyheap/render.hpp"

using namespace polyheap;

namespace {

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

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("rational strings") {
  CHECK(rational_string(Rational(6, 2)) == "3");
  CHECK(rational_string(Rational(-2, 4)) == "-1/2");
  CHECK(rational_string(Rational(0)) == "0");
}

TEST_CASE("object JSON") {
  CHECK(to_json(CatPath{"UFDC"}) == Json::parse(R"({"tokens":"UFDC"})"));
  CHECK(to_json(phi_inv("UC")) ==
        Json::parse(R"({"dimers":[{"pos":0,"level":0},{"pos":2,"level":0},{"pos":1,"level":1}]})"));
  CHECK(to_json(Animal({{1, 1}, {0, 1}, {1, 0}})) == Json::parse(R"({"cells":[[0,1],[1,0],[1,1]]})"));
}

TEST_CASE("heap JSON is canonical whatever the frame") {
  const Heap h({{5, 0}, {4, 1}});
  CHECK(to_json(h) == to_json(h.translated(-9)));
  CHECK(to_json(h)["dimers"][0]["pos"] == 1);
}

TEST_CASE("series JSON") {
  CHECK(to_json(gf::motzkin_excursions(5)) == Json::parse(R"(["1","1","2","4","9"])"));
  const Json p = to_json(gf::pyramids(4));
  CHECK(p.size() == 4);
  CHECK(p[3] == Json::parse(R"(["2","2","1","0"])"));
  const Json s = to_json(gf::stacked(3));
  CHECK(s[2][1][1] == "1");
  const Json ids = to_json(check_identities(6));
  CHECK(ids.is_array());
  CHECK(ids[0].contains("identity"));
  CHECK(ids[0]["passed"] == true);
}

TEST_CASE("report JSON") {
  const Json r = to_json(expected_minimal_dimers(2));
  CHECK(r["statistic"] == "minimal_dimers");
  CHECK(r["exact"] == "7/6");
  CHECK(r["estimator"] == "exact");
  CHECK(r["target"] == "3/28");
  const Json g = to_json(growth_check(3));
  CHECK(g["rows"].size() == 3);
  CHECK(g["ratio_increasing"] == true);
}

TEST_CASE("kinds") {
  CHECK(parse_kind("heap") == ObjectKind::Heap);
  CHECK(kind_name(ObjectKind::Animal) == "animal");
  CHECK(code_of([] { parse_kind("tree"); }) == ErrorCode::InvalidInput);
  CHECK(kind_of(Object{CatPath{"F"}}) == ObjectKind::Path);
}

TEST_CASE("parse_object detects the kind") {
  CHECK(std::get<CatPath>(parse_object("UFDC")).tokens == "UFDC");
  CHECK(std::get<CatPath>(parse_object("  UC\n")).tokens == "UC");
  CHECK(std::get<CatPath>(parse_object(R"("UC")")).tokens == "UC");
  CHECK(std::get<CatPath>(parse_object(R"({"tokens":"FC"})")).tokens == "FC");
  CHECK(std::get<CatPath>(parse_object("")).tokens.empty());
  CHECK(std::get<Heap>(parse_object(R"({"dimers":[{"pos":0,"level":0},{"pos":1,"level":1}]})")) ==
        Heap({{0, 0}, {1, 1}}));
  CHECK(std::get<Animal>(parse_object(R"({"cells":[[0,0],[0,1]]})")) == Animal({{0, 0}, {0, 1}}));
}

TEST_CASE("parse_object round trips its own output") {
  for (const CatPath& p : enumerate(5, PathMode::Cat)) {
    const Heap h = phi_inv(p.tokens);
    CHECK(std::get<CatPath>(parse_object(to_json(p).dump())) == p);
    CHECK(std::get<Heap>(parse_object(to_json(h).dump())).dimers() == h.dimers());
  }
}

TEST_CASE("parse_object errors") {
  CHECK(code_of([] { parse_object(R"({"dimers":[{"pos":0,"level":0},{"pos":1,"level":0}]})"); }) ==
        ErrorCode::Collision);
  CHECK(code_of([] { parse_object(R"({"dimers":[{"pos":0,"level":3}]})"); }) == ErrorCode::NotFallen);
  CHECK(code_of([] { parse_object(R"({"cells":[[0,0],[2,2]]})"); }) == ErrorCode::NotConnected);
  CHECK(code_of([] { parse_object(R"({"other":1})"); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { parse_object(R"({"dimers":[{"pos":"x"}]})"); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { parse_object("{not json"); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { parse_object("UQ"); }) == ErrorCode::InvalidInput);
}

TEST_CASE("svg structure") {
  const std::string path = render_svg(Object{CatPath{"UUCFUDC"}});
  CHECK(path.rfind("<svg", 0) == 0);
  CHECK(occurrences(path, "class=\"path\"") == 1);
  CHECK(occurrences(path, "class=\"catastrophe\"") == 2);
  const std::string heap = render_svg(Object{phi_inv("UUFDC")});
  CHECK(occurrences(heap, "class=\"dimer\"") == 6);
  const std::string animal = render_svg(Object{Animal({{0, 0}, {1, 0}, {1, 1}})});
  CHECK(occurrences(animal, "class=\"cell\"") == 3);
  CHECK(occurrences(animal, "</svg>") == 1);
  CHECK(code_of([] { render_svg(Object{CatPath{"UUCD"}}); }) == ErrorCode::NegativeAltitude);
  CHECK(code_of([] { render_ascii(Object{CatPath{"U"}}); }) == ErrorCode::NonzeroFinalAltitude);
}

TEST_CASE("ascii drawings") {
  CHECK_FALSE(render_ascii(Object{CatPath{"UD"}}).empty());
  const std::string heap = render_ascii(Object{Heap({{0, 0}, {1, 1}})});
  CHECK(heap.find('\n') != std::string::npos);
  CHECK_FALSE(render_ascii(Object{Animal({{0, 0}})}).empty());
}
