#include "doctest.h"

#include "fig/invariants.hpp"

using namespace fig;

namespace {

Presentation free_presentation(std::vector<int> degrees) {
  auto f = FieldSpec::rationals();
  auto g = FiniteGroup::trivial();
  Presentation p;
  p.field = f;
  p.group = g;
  for (int m : degrees)
    p.generators.push_back({m, regular_rep(f, g, m)});
  return p;
}

Presentation t0() {
  auto p = free_presentation({0});
  p.relations.push_back({1, {{0, FIGMorphism::standard(0, 1), {mpq_class(1)}}}});
  return p;
}

/// M(1) / (e_{1} - e_{2}) at degree 2, isomorphic to ker(M(0) -> T(0)).
Presentation depth_one() {
  auto p = free_presentation({1});
  p.relations.push_back({2,
                         {{0, FIGMorphism::from_subset({0}, 2), {mpq_class(1)}},
                          {0, FIGMorphism::from_subset({1}, 2), {mpq_class(-1)}}}});
  return p;
}

} // namespace

TEST_CASE("extended integers") {
  CHECK(ExtInt::neg_inf() < ExtInt::of(-100));
  CHECK(ExtInt::of(100) < ExtInt::pos_inf());
  CHECK(ExtInt::neg_inf().plus(5) == ExtInt::neg_inf());
  CHECK(ExtInt::of(2).plus(-3) == ExtInt::of(-1));
  CHECK(ExtInt::pos_inf().str() == "inf");
  CHECK(ExtInt::neg_inf().str() == "-inf");
  CHECK(max(ExtInt::of(1), ExtInt::neg_inf()) == ExtInt::of(1));
  CHECK(degree_of({0, 3, 0, 1, 0}) == ExtInt::of(3));
  CHECK(degree_of({0, 0}) == ExtInt::neg_inf());
}

TEST_CASE("interpolation") {
  std::vector<mpq_class> ys{mpq_class(0), mpq_class(1), mpq_class(3)};
  auto p = interpolate({2, 3, 4}, ys);
  for (int k = 0; k < 3; ++k)
    CHECK(evaluate(p, 2 + k) == ys[k]);
  CHECK(polynomial_string(interpolate({0, 1}, {mpq_class(0), mpq_class(1)})) == "n");
  CHECK(polynomial_string({mpq_class(1), mpq_class(1)}) == "n + 1");
  CHECK(polynomial_string({mpq_class(0), mpq_class(0), mpq_class(1, 2)}) == "1/2*n^2");
  CHECK(polynomial_string({}) == "0");
}

TEST_CASE("certification windows") {
  CHECK(stable_start(2, 3) == 5);
  CHECK(stable_start(0, 1) == 1);
  CHECK(stable_start(1, -1) == 0);
  CHECK(homology_window(1, 2, 3) == 3);
  CHECK(homology_window(2, 2, 3) == 6);
  CHECK(required_truncation(Invariant::hilbert, 0, 1) == 2);
  CHECK(parse_invariant("dwidth") == Invariant::derived_regularity);
  CHECK_FALSE(parse_invariant("bogus").has_value());
  for (auto inv : all_invariants())
    CHECK(parse_invariant(invariant_name(inv)) == inv);
}

TEST_CASE("T(0)") {
  Analysis an(t0(), 6);
  CHECK(an.module_degree().value == ExtInt::of(0));
  CHECK(an.hd(0).value == ExtInt::of(0));
  CHECK(an.hd(1).value == ExtInt::of(1));
  CHECK(an.depth().value == ExtInt::of(0));
  auto dr = an.derived_regularity();
  CHECK(dr.dreg == ExtInt::of(0));
  CHECK(dr.dwidth == ExtInt::of(1));
  CHECK(an.regularity().value == ExtInt::of(0));
  CHECK(an.regularity_bound() == ExtInt::of(0));
  auto np = an.nagpal();
  CHECK(np.direct == ExtInt::of(1));
  CHECK(np.from_dreg == ExtInt::of(1));
  auto h = an.hilbert();
  REQUIRE(h.polynomial);
  CHECK(polynomial_string(*h.polynomial) == "0");
  CHECK(h.start == 1);
  CHECK(h.disagreements.empty());
  auto t = an.torsion();
  CHECK_FALSE(t.torsion_free);
  CHECK(t.dims[0] == 1);
  auto fl = an.sharp_filtration();
  CHECK_FALSE(fl.h1_vanishes);
  CHECK_FALSE(fl.constructed);
}

TEST_CASE("M(1)") {
  Analysis an(free_presentation({1}), 5);
  CHECK(an.hd(0).value == ExtInt::of(1));
  for (int i = 1; i <= 3; ++i)
    CHECK(an.hd(i).value == ExtInt::neg_inf());
  CHECK(an.depth().value == ExtInt::pos_inf());
  CHECK(an.regularity().value == ExtInt::neg_inf());
  CHECK(an.derived_regularity().dreg == ExtInt::neg_inf());
  CHECK(an.nagpal().direct == ExtInt::of(0));
  auto h = an.hilbert();
  REQUIRE(h.polynomial);
  CHECK(polynomial_string(*h.polynomial) == "n");
  CHECK(h.earliest_agreement == 0);
  auto fl = an.sharp_filtration();
  CHECK(fl.constructed);
  CHECK(fl.cofactors.size() == 1);
}

TEST_CASE("M(0) + M(1) splits in two steps") {
  Analysis an(free_presentation({0, 1}), 4);
  auto fl = an.sharp_filtration();
  CHECK(fl.h1_vanishes);
  CHECK(fl.constructed);
  REQUIRE(fl.cofactors.size() == 2);
  CHECK(fl.cofactors[0].degree == 0);
  CHECK(fl.cofactors[1].degree == 1);
  CHECK(fl.matches_h0);
  CHECK(polynomial_string(*an.hilbert().polynomial) == "n + 1");
}

TEST_CASE("zero module") {
  Analysis an(TruncatedFIGModule::zero(FieldSpec::rationals(), FiniteGroup::trivial(), 3));
  CHECK(an.generation_degree() == -1);
  CHECK(an.hd(0).value == ExtInt::neg_inf());
  CHECK(an.depth().value == ExtInt::pos_inf());
}

TEST_CASE("depth one and the syzygy chain") {
  Analysis v(depth_one(), 6);
  CHECK(v.dims() == std::vector<std::size_t>{0, 1, 1, 1, 1, 1, 1});
  CHECK(v.depth().value == ExtInt::of(1));
  CHECK(v.torsion().torsion_free);

  Analysis base(t0(), 7);
  Analysis s1(base.resolution().syzygy(1));
  Analysis s2(base.resolution().syzygy(2));
  CHECK(s1.depth().value == ExtInt::of(1));
  CHECK(s2.depth().value == ExtInt::of(2));
  auto d1 = s1.dims();
  CHECK(std::vector<std::size_t>(d1.begin(), d1.begin() + 7) == v.dims());
}

TEST_CASE("Analysis uses homological degrees when built from a module") {
  Analysis from_p(t0(), 5);
  Analysis from_v(from_p.module());
  CHECK_FALSE(from_v.declared());
  CHECK(from_v.generation_degree() == 0);
  CHECK(from_v.relation_degree() == 1);
  CHECK(from_v.depth().value == from_p.depth().value);
}
