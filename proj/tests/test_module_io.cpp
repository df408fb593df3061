#include "doctest.h"

#include "fig/module_io.hpp"

using namespace fig;
using nlohmann::json;

namespace {

std::string example(const std::string &name) { return std::string(FIG_EXAMPLES_DIR) + "/" + name; }

} // namespace

TEST_CASE("rationals") {
  CHECK(parse_rational(json(3)) == 3);
  CHECK(parse_rational(json("-2/6")) == mpq_class(-1, 3));
  CHECK(format_rational(mpq_class(5, 10)) == "1/2");
  CHECK_THROWS_AS(parse_rational(json("x")), ParseError);
  CHECK_THROWS_AS(parse_rational(json("1/0")), ParseError);
}

TEST_CASE("fields and groups") {
  CHECK(parse_field(json("Q")).is_rational());
  json p = 5;
  CHECK(parse_field(json("Fp"), &p).characteristic() == 5);
  CHECK(parse_field(json("Fp:3")).characteristic() == 3);
  CHECK_THROWS_AS(parse_field(json("Fp")), ParseError);
  CHECK(parse_group(json("Z2")).order() == 2);
  auto g = parse_group(json{{"table", {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}}});
  CHECK(g.order() == 3);
  CHECK(parse_group(group_to_json(g)) == g);
  CHECK_THROWS_AS(parse_group(json{{"table", {{0, 1}, {0, 1}}}}), ParseError);
}

TEST_CASE("bundled examples parse") {
  for (const char *name : {"t0.json", "m0.json", "m1.json", "m0_m1.json", "m1_mod_difference.json", "z2_sign.json"}) {
    auto mf = read_module_file(example(name));
    CHECK(mf.truncation.has_value());
    CHECK(!mf.presentation.generators.empty());
  }
  auto z = read_module_file(example("z2_sign.json"));
  CHECK(z.presentation.group.order() == 2);
  CHECK(z.presentation.generators[0].rep.dim == 1);
}

TEST_CASE("round trip through JSON") {
  auto mf = read_module_file(example("z2_sign.json"));
  auto j = to_json(mf.presentation, 4);
  auto back = parse_module_file(j);
  CHECK(back.truncation == 4);
  CHECK(to_json(back.presentation, 4) == j);
  CHECK(realize(back.presentation, 4).module.dims() == realize(mf.presentation, 4).module.dims());

  auto t = read_module_file(example("t0.json"));
  auto jt = to_json(t.presentation);
  CHECK_FALSE(jt.contains("truncation"));
  CHECK_FALSE(jt["generators"][0].contains("action"));
}

TEST_CASE("schema violations") {
  json base = {{"field", "Q"},
               {"group", "trivial"},
               {"generators", {{{"degree", 1}, {"dim", 1}}}},
               {"relations", json::array()}};
  CHECK_NOTHROW(parse_module_file(base));
  auto bad = base;
  bad["generators"][0]["dim"] = 2;
  CHECK_THROWS_AS(parse_module_file(bad), ParseError);
  bad = base;
  bad["relations"] = json::parse(R"([{"degree": 2, "terms": [{"gen": 0, "inj": [1, 1], "coeff": 1}]}])");
  CHECK_THROWS_AS(parse_module_file(bad), ParseError);
  bad = base;
  bad["relations"] = json::parse(R"([{"degree": 2, "terms": [{"gen": 3, "inj": [1], "coeff": 1}]}])");
  CHECK_THROWS_AS(parse_module_file(bad), ParseError);
  bad = base;
  bad["field"] = "R";
  CHECK_THROWS_AS(parse_module_file(bad), ParseError);
  bad = base;
  bad["generators"][0]["action"] = {{"transpositions", json::array()}, {"decorations", json::array()}};
  bad["generators"][0]["dim"] = 1;
  CHECK_NOTHROW(parse_module_file(bad));
  bad["group"] = "Z2";
  CHECK_THROWS_AS(parse_module_file(bad), ParseError);
  CHECK_THROWS_AS(read_module_file(example("does_not_exist.json")), ParseError);
}
