#include "doctest.h"

#include "fig/verify.hpp"

using namespace fig;

TEST_CASE("random presentations are deterministic and well formed") {
  RandomParams p;
  p.count = 6;
  p.fields = {FieldSpec::rationals(), FieldSpec::prime(2)};
  p.groups = {FiniteGroup::trivial(), FiniteGroup::preset("Z2")};
  auto a = random_corpus(p), b = random_corpus(p);
  REQUIRE(a.size() == 6);
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK_NOTHROW(validate_presentation(a[k].presentation));
    CHECK(a[k].presentation.generation_degree() <= p.d_max);
    CHECK(a[k].presentation.relation_degree() <= p.r_max);
    CHECK(to_json(verify_instance(a[k].presentation, {5, 3, 2, 1})).dump() ==
          to_json(verify_instance(b[k].presentation, {5, 3, 2, 1})).dump());
  }
  CHECK(a[1].presentation.field == FieldSpec::prime(2));
  CHECK(a[2].presentation.group == FiniteGroup::preset("Z2"));
}

TEST_CASE("a small sweep passes") {
  RandomParams p;
  p.count = 4;
  p.r_max = 2;
  VerifyOptions o;
  o.truncation = 5;
  o.threads = 2;
  auto r = verify_theorems(p, o);
  for (const auto &inst : r.instances)
    for (const auto &c : inst.checks) {
      CAPTURE(c.name);
      CAPTURE(c.witness);
      CHECK(c.passed);
    }
  CHECK(r.passed());
  CHECK(to_json(r)["passed"] == true);
}

TEST_CASE("intersection identity on T(0)") {
  auto f = FieldSpec::rationals();
  auto g = FiniteGroup::trivial();
  Presentation p;
  p.field = f;
  p.group = g;
  p.generators.push_back({0, trivial_rep(f, g, 0)});
  p.relations.push_back({1, {{0, FIGMorphism::standard(0, 1), {mpq_class(1)}}}});
  auto c = check_intersection_identity(realize(p, 5), 0, 1);
  CHECK(c.passed);
  CHECK(c.certified);
}

TEST_CASE("generated submodules of free modules") {
  std::mt19937_64 rng(4);
  for (int m = 0; m <= 2; ++m) {
    auto c = check_generated_submodule(rng, FieldSpec::prime(3), FiniteGroup::preset("Z2"), m, 5);
    CHECK(c.passed);
  }
}
