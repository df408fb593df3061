#include "doctest.h"

#include "fig/figcat.hpp"

#include <random>
#include <set>

using namespace fig;

namespace {

long falling(int m, int n) {
  long r = 1;
  for (int k = 0; k < n; ++k)
    r *= m - k;
  return r;
}

} // namespace

TEST_CASE("hom set sizes") {
  for (const char *name : {"trivial", "Z2", "Z3"}) {
    auto g = FiniteGroup::preset(name);
    for (int n = 0; n <= 3; ++n)
      for (int m = n; m <= 4; ++m) {
        auto hom = enumerate_hom(n, m, g);
        long expect = falling(m, n);
        for (int k = 0; k < n; ++k)
          expect *= g.order();
        CHECK(static_cast<long>(hom.size()) == expect);
        CHECK(std::set<FIGMorphism>(hom.begin(), hom.end()).size() == hom.size());
        CHECK(static_cast<long>(orbit_representatives(n, m, g).size()) == binomial(m, n));
      }
    CHECK(enumerate_hom(3, 2, g).empty());
  }
}

TEST_CASE("composition is associative with identities") {
  auto g = FiniteGroup::preset("Z3");
  auto a = enumerate_hom(1, 2, g), b = enumerate_hom(2, 3, g), c = enumerate_hom(3, 4, g);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    const auto &f = a[rng() % a.size()];
    const auto &h = b[rng() % b.size()];
    const auto &k = c[rng() % c.size()];
    CHECK(compose_morphisms(g, k, compose_morphisms(g, h, f)) == compose_morphisms(g, compose_morphisms(g, k, h), f));
    CHECK(compose_morphisms(g, FIGMorphism::identity(2), f) == f);
    CHECK(compose_morphisms(g, f, FIGMorphism::identity(1)) == f);
  }
}

TEST_CASE("factorization through an increasing injection") {
  auto g = FiniteGroup::preset("Z2");
  for (const auto &f : enumerate_hom(2, 4, g)) {
    auto fac = factor_morphism(f);
    auto back = compose_morphisms(g, FIGMorphism::from_subset(fac.image, 4), FIGMorphism::from_wreath(fac.aut));
    CHECK(back == f);
    CHECK(std::is_sorted(fac.image.begin(), fac.image.end()));
  }
  CHECK_THROWS(validate_morphism(g, FIGMorphism{2, 3, {0, 0}, {0, 0}}));
}

TEST_CASE("subsets and ranks") {
  for (int n = 0; n <= 7; ++n)
    for (int k = 0; k <= n; ++k) {
      auto s = subsets(n, k);
      CHECK(static_cast<long>(s.size()) == binomial(n, k));
      CHECK(std::is_sorted(s.begin(), s.end()));
      for (std::size_t i = 0; i < s.size(); ++i)
        CHECK(subset_rank(s[i], n) == i);
    }
}

TEST_CASE("Sigma(b) has Catalan many elements") {
  const long catalan[] = {1, 1, 2, 5, 14, 42};
  for (int b = 0; b <= 5; ++b) {
    auto s = sigma(b);
    CHECK(static_cast<long>(s.subsets.size()) == catalan[b]);
    for (const auto &x : s.subsets) {
      CHECK(in_sigma(x));
      CHECK(static_cast<int>(x.size()) == b);
    }
  }
  CHECK(sigma(2).subsets == std::vector<std::vector<int>>{{1, 2}, {1, 3}});
  for (const auto &x : sigma_ab(1, 3).subsets)
    CHECK(x.front() == 1);
}

TEST_CASE("J elements") {
  auto g = FiniteGroup::trivial();
  auto j = GroupAlgebraElement::j_element(2, 1, 2);
  CHECK(j.terms.size() == 2);
  // J^2 = 2J.
  auto jj = j.multiply(g, j);
  CHECK(jj.terms.size() == 2);
  for (auto &[x, c] : jj.terms)
    CHECK(c == 2 * j.terms.at(x));
  CHECK(j_product({1}, 2, g).terms == j.terms);
}

TEST_CASE("lexicographic orbit property on small cases") {
  CHECK(verify_lex_first({1}, {1}, {2}, 3));
  CHECK(verify_lex_first({1, 2}, {1, 2, 5}, {3, 4}, 6));
  CHECK_THROWS_AS(verify_lex_first({1}, {2}, {3}, 3), std::invalid_argument);
}

TEST_CASE("span identity for small parameters") {
  auto rep = verify_span_identity(1, 2, 1, FiniteGroup::trivial());
  CHECK(rep.all());
  CHECK(verify_span_identity(1, 3, 1, FiniteGroup::preset("Z2")).all());
}
