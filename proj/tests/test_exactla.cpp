#include "doctest.h"

#include "fig/exactla.hpp"

#include <random>

using namespace fig;

namespace {

Matrix random_matrix(std::mt19937_64 &rng, const FieldSpec &f, std::size_t r, std::size_t c, int density) {
  std::vector<std::vector<long>> e(r, std::vector<long>(c, 0));
  for (auto &row : e)
    for (auto &x : row)
      if (static_cast<int>(rng() % 100) < density)
        x = static_cast<long>(rng() % 7) - 3;
  return Matrix::from_ints(f, e);
}

std::vector<FieldSpec> fields() { return {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(7)}; }

} // namespace

TEST_CASE("field parsing and names") {
  CHECK(FieldSpec::parse("Q").is_rational());
  CHECK(FieldSpec::parse("Fp:5").characteristic() == 5);
  CHECK(FieldSpec::parse("F3").characteristic() == 3);
  CHECK_THROWS_AS(FieldSpec::prime(4), std::invalid_argument);
  CHECK(FieldSpec::prime(3) == FieldSpec::parse(FieldSpec::prime(3).name()));
}

TEST_CASE("arithmetic over F_p reduces rationals") {
  auto f = FieldSpec::prime(5);
  Matrix m(f, 1, 1);
  m.set(0, 0, mpq_class(1, 2));
  CHECK(m.get(0, 0) == 3);
  m.set(0, 0, -1);
  CHECK(m.get(0, 0) == 4);
}

TEST_CASE("rank plus nullity") {
  std::mt19937_64 rng(11);
  for (const auto &f : fields())
    for (int t = 0; t < 20; ++t) {
      std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
      auto a = random_matrix(rng, f, r, c, 40);
      auto k = kernel(a);
      CHECK(rank(a) + k.rows() == c);
      CHECK((a * k.transpose()).is_zero());
      auto lk = left_kernel(a);
      CHECK(rank(a) + lk.rows() == r);
      CHECK((lk * a).is_zero());
    }
}

TEST_CASE("row reduction transform") {
  std::mt19937_64 rng(3);
  for (const auto &f : fields()) {
    auto a = random_matrix(rng, f, 6, 5, 50);
    auto rr = row_reduce(a);
    auto ta = rr.transform * a;
    for (std::size_t i = 0; i < rr.rank; ++i)
      CHECK(ta.row(i) == rr.reduced.row(i));
    for (std::size_t i = rr.rank; i < ta.rows(); ++i)
      CHECK(ta.row(i).is_zero());
  }
}

TEST_CASE("subspace sum and intersection dimensions") {
  std::mt19937_64 rng(5);
  for (const auto &f : fields())
    for (int t = 0; t < 20; ++t) {
      auto u = Subspace::span(random_matrix(rng, f, 1 + rng() % 5, 7, 50));
      auto w = Subspace::span(random_matrix(rng, f, 1 + rng() % 5, 7, 50));
      CHECK(u.sum(w).dim() + u.intersect(w).dim() == u.dim() + w.dim());
      CHECK(u.sum(w).contains(u.basis()));
      CHECK(u.contains(u.intersect(w).basis()));
      CHECK(w.contains(u.intersect(w).basis()));
    }
}

TEST_CASE("coordinates and quotient maps") {
  std::mt19937_64 rng(8);
  auto f = FieldSpec::rationals();
  auto rows = random_matrix(rng, f, 4, 6, 70);
  auto s = Subspace::span(rows);
  auto c = s.coordinates(rows);
  CHECK(c * s.basis() == rows);
  Subspace all(f, 6);
  all.insert(Matrix::identity(f, 6));
  auto q = quotient_map(all, s);
  CHECK(q.dim == 6 - s.dim());
  CHECK(q.project(s.basis()).is_zero());
  CHECK(rank(q.project(Matrix::identity(f, 6))) == q.dim);
  CHECK_THROWS_AS(quotient_map(s, all), std::invalid_argument);
}

TEST_CASE("solve") {
  auto f = FieldSpec::rationals();
  auto a = Matrix::from_ints(f, {{1, 2}, {3, 4}});
  auto b = Matrix::from_ints(f, {{5}, {6}});
  Matrix x;
  REQUIRE(solve(a, b, x));
  CHECK(a * x == b);
  auto sing = Matrix::from_ints(f, {{1, 1}, {1, 1}});
  CHECK_FALSE(solve(sing, Matrix::from_ints(f, {{1}, {2}}), x));
}

TEST_CASE("results are identical across runs") {
  std::mt19937_64 r1(9), r2(9);
  auto f = FieldSpec::rationals();
  auto a = random_matrix(r1, f, 7, 7, 60), b = random_matrix(r2, f, 7, 7, 60);
  CHECK(kernel(a) == kernel(b));
  CHECK(row_reduce(a).reduced == row_reduce(b).reduced);
}

TEST_CASE("Hermite normal form") {
  IntMatrix id{{1, 0}, {0, 1}};
  CHECK(hermite_normal_form(id).basis == id);
  auto h2 = hermite_normal_form({{2, 0}, {0, 2}});
  auto h1 = hermite_normal_form({{2, 0}, {0, 1}});
  CHECK(h2.basis != h1.basis);
  CHECK(hermite_normal_form({{2, 0}, {0, 2}, {4, 6}}).basis == h2.basis);
  CHECK(hermite_normal_form({{0, 2}, {2, 2}}).basis == h2.basis);

  std::mt19937_64 rng(17);
  IntMatrix gens(4, std::vector<mpz_class>(6));
  for (auto &row : gens)
    for (auto &x : row)
      x = static_cast<long>(rng() % 11) - 5;
  auto h = hermite_normal_form(gens);
  // v is in the lattice iff its coordinates in the generators are integral.
  auto f = FieldSpec::rationals();
  std::vector<std::vector<mpq_class>> q;
  for (auto &row : gens)
    q.emplace_back(row.begin(), row.end());
  auto g = Matrix::from_rationals(f, q);
  REQUIRE(rank(g) == 4);
  CHECK(h.rank == 4);
  for (int probe = 0; probe < 20; ++probe) {
    std::vector<mpz_class> v(6, 0);
    for (int i = 0; i < 4; ++i) {
      long c = static_cast<long>(rng() % 5) - 2;
      for (int j = 0; j < 6; ++j)
        v[j] += c * gens[i][j];
    }
    if (probe % 2)
      v[rng() % 6] += 1;
    std::vector<mpq_class> vq(v.begin(), v.end());
    Matrix x;
    bool in_span = solve(g.transpose(), Matrix::from_rationals(f, {vq}).transpose(), x);
    bool integral = in_span;
    for (std::size_t i = 0; in_span && i < x.rows(); ++i)
      integral = integral && x.get(i, 0).get_den() == 1;
    CHECK(lattice_contains(h, v) == integral);
  }
}
