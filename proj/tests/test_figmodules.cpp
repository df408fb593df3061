#include "doctest.h"

#include "fig/figmodules.hpp"
#include "fig/functors.hpp"

#include <random>

using namespace fig;

namespace {

FBGModule single(const FieldSpec &f, const FiniteGroup &g, int m, GnRep rep) {
  FBGModule w;
  w.field = f;
  w.group = g;
  w.support[m] = std::move(rep);
  return w;
}

} // namespace

TEST_CASE("representations satisfy the group relations") {
  for (const char *name : {"trivial", "Z2", "Z3"}) {
    auto g = FiniteGroup::preset(name);
    for (int n = 0; n <= 3; ++n) {
      auto r = regular_rep(FieldSpec::rationals(), g, n);
      CHECK(validate_rep(g, r).empty());
      CHECK(validate_rep(g, trivial_rep(FieldSpec::prime(2), g, n, 2)).empty());
    }
  }
  auto g = FiniteGroup::preset("Z2");
  auto bad = trivial_rep(FieldSpec::rationals(), g, 1);
  bad.decs[0] = Matrix::from_ints(FieldSpec::rationals(), {{2}});
  CHECK_FALSE(validate_rep(g, bad).empty());
}

TEST_CASE("free module dimensions and structure") {
  auto f = FieldSpec::rationals();
  auto g = FiniteGroup::preset("Z2");
  auto m = build_free(single(f, g, 1, regular_rep(f, g, 1)), 5);
  CHECK(validate(m).empty());
  for (int n = 0; n <= 5; ++n)
    CHECK(m.dim(n) == static_cast<std::size_t>(binomial(n, 1) * 2));
  auto m0 = build_free(single(f, FiniteGroup::trivial(), 0, trivial_rep(f, FiniteGroup::trivial(), 0)), 4);
  for (int n = 0; n < 4; ++n) {
    CHECK(m0.dim(n) == 1);
    CHECK(m0.transition(n) == Matrix::identity(f, 1));
  }
  CHECK_THROWS_AS(build_free(single(f, g, 3, regular_rep(f, g, 3)), 2), std::domain_error);
}

TEST_CASE("induced maps are functorial") {
  auto f = FieldSpec::prime(3);
  auto g = FiniteGroup::preset("Z2");
  auto m = build_free(single(f, g, 1, regular_rep(f, g, 1)), 4);
  auto a = enumerate_hom(1, 2, g), b = enumerate_hom(2, 4, g);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    const auto &x = a[rng() % a.size()];
    const auto &y = b[rng() % b.size()];
    CHECK(induced_map(m, compose_morphisms(g, y, x)) == induced_map(m, x) * induced_map(m, y));
  }
}

TEST_CASE("realizing presentations") {
  auto f = FieldSpec::rationals();
  auto g = FiniteGroup::trivial();
  Presentation p;
  p.field = f;
  p.group = g;
  p.generators.push_back({0, trivial_rep(f, g, 0)});
  SUBCASE("no relations gives the free cover") {
    auto r = realize(p, 4);
    CHECK(r.module.dims() == std::vector<std::size_t>{1, 1, 1, 1, 1});
  }
  SUBCASE("killing the degree one element gives T(0)") {
    p.relations.push_back({1, {{0, FIGMorphism::standard(0, 1), {mpq_class(1)}}}});
    auto r = realize(p, 4);
    CHECK(r.module.dims() == std::vector<std::size_t>{1, 0, 0, 0, 0});
    CHECK(validate(r.module).empty());
    CHECK(validate_morphism(r.cover, r.module, r.quotient).empty());
    CHECK_THROWS_AS(realize(p, 0), std::domain_error);
  }
  SUBCASE("a relation with coefficient 2 vanishes over F_2") {
    p.field = FieldSpec::prime(2);
    p.generators[0].rep = trivial_rep(p.field, g, 0);
    p.relations.push_back({1, {{0, FIGMorphism::standard(0, 1), {mpq_class(2)}}}});
    auto r = realize(p, 3);
    CHECK(r.module.dims() == std::vector<std::size_t>{1, 1, 1, 1});
  }
}

TEST_CASE("malformed presentations are rejected") {
  auto f = FieldSpec::rationals();
  auto g = FiniteGroup::trivial();
  Presentation p;
  p.generators.push_back({1, regular_rep(f, g, 1)});
  p.relations.push_back({2, {{0, FIGMorphism::standard(2, 2), {mpq_class(1)}}}});
  CHECK_THROWS_AS(validate_presentation(p), std::invalid_argument);
  p.relations[0].terms[0].map = FIGMorphism::standard(1, 2);
  p.relations[0].terms[0].coeff = {1, 2};
  CHECK_THROWS_AS(validate_presentation(p), std::invalid_argument);
  p.relations[0].terms[0].coeff = {1};
  CHECK_NOTHROW(validate_presentation(p));
}

TEST_CASE("hom from a free module") {
  auto f = FieldSpec::rationals();
  auto g = FiniteGroup::trivial();
  auto v = build_free(single(f, g, 0, trivial_rep(f, g, 0)), 3);
  auto phi = hom_from_free(trivial_rep(f, g, 0), v, Matrix::identity(f, 1));
  auto m = build_free(single(f, g, 0, trivial_rep(f, g, 0)), 3);
  CHECK(validate_morphism(m, v, phi).empty());
  CHECK(cokernel(v, phi).dims() == std::vector<std::size_t>{0, 0, 0, 0});
}
