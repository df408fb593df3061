#include "doctest.h"

#include "fig/module_io.hpp"
#include "fig/report.hpp"

#include <fstream>

using namespace fig;
using nlohmann::json;

namespace {

std::string example(const std::string &name) { return std::string(FIG_EXAMPLES_DIR) + "/" + name; }

json report_for(const std::string &name) {
  auto mf = read_module_file(example(name));
  Analysis an(mf.presentation, *mf.truncation);
  return analysis_report(an, ReportOptions{});
}

} // namespace

TEST_CASE("reports match the expected fixtures") {
  for (const char *name : {"t0.json", "m0.json", "m1.json", "m0_m1.json", "m1_mod_difference.json", "z2_sign.json"}) {
    CAPTURE(name);
    std::ifstream in(example(std::string("expected/") + name));
    REQUIRE(in);
    auto expected = json::parse(in);
    CHECK(report_for(name) == expected);
  }
}

TEST_CASE("fixture values agree with hand computations") {
  auto t0 = report_for("t0.json");
  CHECK(t0["depth"]["value"] == 0);
  CHECK(t0["derived_regularity"]["dreg"]["value"] == 0);
  CHECK(t0["nagpal"]["number"]["value"] == 1);
  CHECK(t0["degrees"]["hd_1"]["value"] == 1);
  CHECK(t0["hilbert"]["stable_range_start"]["value"] == 1);
  auto m1 = report_for("m1.json");
  CHECK(m1["depth"]["value"] == "inf");
  CHECK(m1["regularity"]["reg"]["value"] == "-inf");
  CHECK(m1["hilbert"]["polynomial"]["value"] == "n");
  auto k = report_for("m1_mod_difference.json");
  CHECK(k["depth"]["value"] == 1);
  auto z = report_for("z2_sign.json");
  CHECK(z["module"]["dims"] == json({0, 1, 0, 0, 0, 0, 0}));
  CHECK(z["nagpal"]["number"]["value"] == 2);
}

TEST_CASE("every number carries a certification flag") {
  auto r = report_for("t0.json");
  for (const char *key : {"depth"})
    CHECK(r[key].contains("certified"));
  for (auto &[k, v] : r["degrees"].items())
    if (k != "relation_degree")
      CHECK(v.contains("certified"));
}

TEST_CASE("reports are byte-identical across runs") {
  auto a = report_for("z2_sign.json").dump();
  auto b = report_for("z2_sign.json").dump();
  CHECK(a == b);
}

TEST_CASE("insufficient truncation is detected") {
  auto mf = read_module_file(example("z2_sign.json"));
  Analysis an(mf.presentation, 2);
  ReportOptions opts;
  auto missing = missing_windows(an, opts);
  CHECK_FALSE(missing.empty());
  for (auto &[inv, n] : missing)
    CHECK(n > 2);
  auto rep = analysis_report(an, opts);
  CHECK(rep["depth"]["certified"] == false);
}

TEST_CASE("text rendering") {
  auto text = text_report(report_for("t0.json"));
  CHECK(text.find("depth") != std::string::npos);
  CHECK(text.find("hilbert.polynomial") != std::string::npos);
  auto unc = text_report(json{{"x", {{"value", 3}, {"certified", false}}}});
  CHECK(unc.find("(truncated)") != std::string::npos);
}
