#include "doctest.h"

#include "fig/resolution.hpp"

#include <random>

using namespace fig;

namespace {

Presentation t0_presentation(const FieldSpec &f) {
  auto g = FiniteGroup::trivial();
  Presentation p;
  p.field = f;
  p.group = g;
  p.generators.push_back({0, trivial_rep(f, g, 0)});
  p.relations.push_back({1, {{0, FIGMorphism::standard(0, 1), {mpq_class(1)}}}});
  return p;
}

} // namespace

TEST_CASE("homology of T(0) is one sign representation per degree") {
  for (auto f : {FieldSpec::rationals(), FieldSpec::prime(2)}) {
    Resolution res(realize(t0_presentation(f), 5).module);
    for (int i = 0; i <= 3; ++i) {
      auto h = res.homology_dims(i);
      for (int n = 0; n <= 5; ++n)
        CHECK(h[n] == (n == i ? 1u : 0u));
    }
  }
}

TEST_CASE("free modules are acyclic") {
  auto f = FieldSpec::rationals();
  auto g = FiniteGroup::preset("Z2");
  Presentation p;
  p.field = f;
  p.group = g;
  p.generators.push_back({1, regular_rep(f, g, 1)});
  p.generators.push_back({2, trivial_rep(f, g, 2)});
  Resolution res(realize(p, 4).module);
  CHECK(res.homology_dims(0) == std::vector<std::size_t>{0, 2, 1, 0, 0});
  for (int i = 1; i <= 2; ++i)
    CHECK(res.homology_dims(i) == std::vector<std::size_t>{0, 0, 0, 0, 0});
  for (int a = 1; a <= 2; ++a)
    CHECK(res.derived_derivative(1, a).dims() == std::vector<std::size_t>(5 - a, 0));
}

TEST_CASE("resolution stages are exact") {
  auto f = FieldSpec::prime(3);
  Resolution res(realize(t0_presentation(f), 4).module);
  for (int i = 1; i <= 2; ++i) {
    const auto &below = res.stage(i - 1);
    const auto &st = res.stage(i);
    for (int n = 0; n <= 4; ++n) {
      // image of d_i equals ker d_{i-1}
      Subspace img(f, below.free.dim(n));
      img.insert(st.images[n]);
      CHECK(img == below.kernel[n]);
    }
  }
  CHECK(res.syzygy(1).dims() == std::vector<std::size_t>{0, 1, 1, 1, 1});
}

TEST_CASE("H_1^{D^a}: intersection formula against the resolution") {
  auto f = FieldSpec::rationals();
  auto p = t0_presentation(f);
  auto v = realize(p, 5).module;
  Resolution res(v);
  for (int a = 1; a <= 3; ++a)
    CHECK(h1da_intersection(p, a, 5).dims() == res.derived_derivative(1, a).dims());
  CHECK(res.derived_derivative(1, 1).dims() == std::vector<std::size_t>{1, 0, 0, 0, 0});
  CHECK(res.derived_derivative(1, 2).dims() == std::vector<std::size_t>{0, 0, 0, 0});
}

TEST_CASE("coordinate intersections") {
  auto f = FieldSpec::rationals();
  auto s = Subspace::span(Matrix::from_ints(f, {{1, 1, 0}, {0, 1, 1}}));
  auto x = intersect_coordinates(s, {0, 2});
  CHECK(x.dim() == 1);
  CHECK(x.contains(Matrix::from_ints(f, {{1, 0, -1}})));
  CHECK(project_coordinates(Matrix::from_ints(f, {{1, 2, 3}}), {1}) == Matrix::from_ints(f, {{0, 2, 0}}));
}
