#include "doctest.h"

#include "fig/groups.hpp"

#include <random>
#include <set>
#include <stdexcept>

using namespace fig;

namespace {

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0)
    r *= b;
  return r;
}

} // namespace

TEST_CASE("presets") {
  CHECK(FiniteGroup::trivial().order() == 1);
  CHECK(FiniteGroup::preset("Z2").order() == 2);
  CHECK(FiniteGroup::preset("Z3").order() == 3);
  auto s3 = FiniteGroup::preset("S3");
  CHECK(s3.order() == 6);
  int noncommuting = 0;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      noncommuting += s3.mul(a, b) != s3.mul(b, a);
  CHECK(noncommuting > 0);
  CHECK_THROWS(FiniteGroup::preset("Q8x"));
}

TEST_CASE("tables are validated") {
  CHECK_NOTHROW(FiniteGroup::from_table({{0, 1}, {1, 0}}));
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1}}), std::invalid_argument);
  // Identity stored as element 1 is relabelled to 0.
  auto g = FiniteGroup::from_table({{1, 0}, {0, 1}});
  CHECK(g.mul(0, 1) == 1);
  CHECK(g.mul(1, 1) == 0);
}

TEST_CASE("wreath product order and group laws") {
  for (const char *name : {"trivial", "Z2", "Z3", "S3"}) {
    auto g = FiniteGroup::preset(name);
    for (int n = 0; n <= 3; ++n) {
      if (g.order() == 6 && n == 3)
        continue;
      auto all = enumerate_wreath(g, n);
      CHECK(static_cast<long>(all.size()) == factorial(n) * ipow(g.order(), n));
      CHECK(std::set<WreathElement>(all.begin(), all.end()).size() == all.size());
      auto id = WreathElement::identity(n);
      std::mt19937_64 rng(n);
      for (int t = 0; t < 30 && !all.empty(); ++t) {
        const auto &x = all[rng() % all.size()];
        const auto &y = all[rng() % all.size()];
        const auto &z = all[rng() % all.size()];
        CHECK(wreath_compose(g, wreath_compose(g, x, y), z) == wreath_compose(g, x, wreath_compose(g, y, z)));
        CHECK(wreath_compose(g, x, wreath_inverse(g, x)) == id);
        CHECK(wreath_compose(g, id, x) == x);
      }
    }
  }
}

TEST_CASE("generator words reproduce elements") {
  auto g = FiniteGroup::preset("S3");
  for (const auto &x : enumerate_wreath(g, 2)) {
    auto w = generator_word(g, x);
    auto acc = WreathElement::identity(2);
    for (const auto &s : w)
      acc = wreath_compose(g, acc,
                           s.kind == GenStep::Kind::swap ? WreathElement::transposition(2, s.index)
                                                         : WreathElement::decoration(2, 0, s.index));
    CHECK(acc == x);
  }
}

TEST_CASE("embedding fixes the new points") {
  auto g = FiniteGroup::preset("Z2");
  auto x = WreathElement::transposition(2, 0);
  auto e = wreath_embed(x, 4);
  CHECK(e.perm == std::vector<int>{1, 0, 2, 3});
  CHECK(e.dec == std::vector<int>{0, 0, 0, 0});
  CHECK_THROWS(validate_wreath(g, WreathElement{{0, 0}, {0, 0}}));
}
