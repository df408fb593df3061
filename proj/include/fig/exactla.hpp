#pragma once

/**
 * @file exactla.hpp
 * @brief Exact linear algebra over the rationals and prime fields.
 *
 * Matrices are stored as sparse rows. Over Q entries are GMP rationals in
 * lowest terms; over F_p they are residues in [0, p). Every kernel, image,
 * quotient and homology computation in the library goes through this file.
 *
 * Linear maps follow the column convention: a map k^a -> k^b is a b x a
 * matrix. Subspaces are stored as bases of row vectors.
 */

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace fig {

class FieldSpec {
public:
  enum class Kind { rationals, prime };

  static FieldSpec rationals() { return FieldSpec(Kind::rationals, 0); }
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static FieldSpec prime(std::uint32_t p);
  /// Parses "Q" or "Fp:<p>" / "F<p>".
  static FieldSpec parse(const std::string &text);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::rationals; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  bool operator==(const FieldSpec &) const = default;

private:
  FieldSpec(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

namespace detail {

struct PrimeField {
  using Elem = std::uint32_t;
  std::uint32_t p;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem neg(Elem a) const { return a ? p - a : 0; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p);
  }
  Elem inv(Elem a) const;
  // acc -= a*b
  void sub_mul(Elem &acc, const Elem &a, const Elem &b) const { acc = sub(acc, mul(a, b)); }
  void add_mul(Elem &acc, const Elem &a, const Elem &b) const { acc = add(acc, mul(a, b)); }
  Elem from_int(long v) const;
  Elem from_rational(const mpq_class &q) const;
  mpq_class to_rational(Elem a) const { return mpq_class(static_cast<unsigned long>(a)); }
  bool operator==(const PrimeField &) const = default;
};

struct RationalField {
  using Elem = mpq_class;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem &a) const { return sgn(a) == 0; }
  bool is_one(const Elem &a) const { return a == 1; }
  Elem add(const Elem &a, const Elem &b) const { return a + b; }
  Elem sub(const Elem &a, const Elem &b) const { return a - b; }
  Elem neg(const Elem &a) const { return -a; }
  Elem mul(const Elem &a, const Elem &b) const { return a * b; }
  Elem inv(const Elem &a) const { return 1 / a; }
  void sub_mul(Elem &acc, const Elem &a, const Elem &b) const;
  void add_mul(Elem &acc, const Elem &a, const Elem &b) const;
  Elem from_int(long v) const { return Elem(v); }
  Elem from_rational(const mpq_class &q) const { return q; }
  mpq_class to_rational(const Elem &a) const { return a; }
  bool operator==(const RationalField &) const = default;
};

template <class F> struct SparseRow {
  std::vector<std::uint32_t> idx;
  std::vector<typename F::Elem> val;
  bool empty() const { return idx.empty(); }
  std::size_t size() const { return idx.size(); }
};

template <class F> struct SparseMat {
  F field;
  std::size_t nrows = 0;
  std::size_t ncols = 0;
  std::vector<SparseRow<F>> rows;
};

// Insertion-ordered semi-echelon basis: rows[k] has entry 1 at piv[k] and is
// zero at piv[j] for every j < k.
template <class F> struct Echelon {
  F field;
  std::size_t ncols = 0;
  std::vector<SparseRow<F>> rows;
  std::vector<std::uint32_t> piv;
};

using MatImpl = std::variant<SparseMat<PrimeField>, SparseMat<RationalField>>;
using EchelonImpl = std::variant<Echelon<PrimeField>, Echelon<RationalField>>;

} // namespace detail

class Matrix {
public:
  Matrix();
  Matrix(const FieldSpec &field, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldSpec &field, std::size_t n);
  static Matrix from_ints(const FieldSpec &field,
                          const std::vector<std::vector<long>> &entries);
  static Matrix from_rationals(const FieldSpec &field,
                               const std::vector<std::vector<mpq_class>> &entries);
  /// rows x cols matrix with a single 1 in each row i at column map[i] (skipped if map[i] < 0).
  static Matrix from_index_map(const FieldSpec &field, std::size_t cols,
                               std::span<const long> map);
  struct Entry {
    std::size_t row, col;
    mpq_class value;
  };
  /// Duplicate positions are summed.
  static Matrix from_entries(const FieldSpec &field, std::size_t rows, std::size_t cols,
                             std::vector<Entry> entries);

  const FieldSpec &field() const { return field_; }
  std::size_t rows() const;
  std::size_t cols() const;
  std::size_t nnz() const;
  bool is_zero() const;

  mpq_class get(std::size_t i, std::size_t j) const;
  /// Nonzero entries of row i as (column, value), by increasing column.
  std::vector<std::pair<std::size_t, mpq_class>> row_entries(std::size_t i) const;
  void set(std::size_t i, std::size_t j, const mpq_class &value);
  void set(std::size_t i, std::size_t j, long value) { set(i, j, mpq_class(value)); }

  Matrix transpose() const;
  Matrix operator*(const Matrix &rhs) const;
  Matrix operator+(const Matrix &rhs) const;
  Matrix operator-(const Matrix &rhs) const;
  Matrix scaled(const mpq_class &c) const;
  bool operator==(const Matrix &rhs) const;

  Matrix row(std::size_t i) const;
  Matrix select_rows(std::span<const std::size_t> which) const;
  Matrix select_cols(std::span<const std::size_t> which) const;
  /// Column j of the input becomes column map[j] of the output (dropped if map[j] < 0).
  Matrix remap_cols(std::size_t new_cols, std::span<const long> map) const;
  Matrix append_rows(const Matrix &below) const;

  static Matrix vstack(std::span<const Matrix> blocks, std::size_t cols, const FieldSpec &field);
  static Matrix hstack(std::span<const Matrix> blocks, std::size_t rows, const FieldSpec &field);
  static Matrix block_diag(const Matrix &a, const Matrix &b);

  std::string to_string() const;

  const detail::MatImpl &impl() const { return impl_; }
  detail::MatImpl &impl() { return impl_; }
  Matrix(const FieldSpec &field, detail::MatImpl impl) : field_(field), impl_(std::move(impl)) {}

private:
  FieldSpec field_;
  detail::MatImpl impl_;
};

/// Rows of `rows` pushed through the map M (column convention): rows * M^T.
Matrix apply_to_rows(const Matrix &map, const Matrix &rows);

struct RowReduction {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  Matrix reduced;   ///< reduced row echelon form, nonzero rows only
  Matrix transform; ///< T with T * A = [reduced; 0]
};

RowReduction row_reduce(const Matrix &a);
std::size_t rank(const Matrix &a);
/// Basis (as rows) of {x : A x = 0}.
Matrix kernel(const Matrix &a);
/// Basis (as rows) of {x : x A = 0}.
Matrix left_kernel(const Matrix &a);
/// Basis (as rows) of the column space of A.
Matrix image(const Matrix &a);
/// Solves A x = b column by column; returns false if some column has no solution.
bool solve(const Matrix &a, const Matrix &b, Matrix &x);

/**
 * A subspace of k^n kept in insertion-ordered semi-echelon form: every basis
 * row has a pivot entry 1 and vanishes at the pivots of all earlier rows.
 */
class Subspace {
public:
  Subspace();
  Subspace(const FieldSpec &field, std::size_t ambient);
  static Subspace span(const Matrix &rows);

  const FieldSpec &field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const;
  bool is_zero() const { return dim() == 0; }

  /// Inserts each row; returns the number of rows that enlarged the space.
  std::size_t insert(const Matrix &rows);
  bool contains(const Matrix &rows) const;
  /// Residues of the rows modulo the subspace.
  Matrix reduce(const Matrix &rows) const;
  /// Coordinates of the rows in basis(); rows must lie in the subspace.
  Matrix coordinates(const Matrix &rows) const;
  Matrix basis() const;
  std::vector<std::size_t> pivots() const;

  Subspace sum(const Subspace &other) const;
  Subspace intersect(const Subspace &other) const;
  bool operator==(const Subspace &other) const;

  const detail::EchelonImpl &impl() const { return impl_; }

private:
  FieldSpec field_;
  std::size_t ambient_;
  detail::EchelonImpl impl_;
};

/// Basis of {x : A x in U}, A in column convention.
Subspace preimage(const Matrix &a, const Subspace &target);

/// The projection V -> V/U for U a subspace of V.
struct QuotientMap {
  Subspace sub;            ///< U
  Subspace complement;     ///< representatives of a basis of V/U, reduced modulo U
  std::size_t dim = 0;     ///< dim V - dim U
  /// Coordinates in V/U of ambient rows lying in V.
  Matrix project(const Matrix &rows) const;
  /// Ambient representatives of the quotient basis.
  Matrix lift() const { return complement.basis(); }
};

/// Throws std::invalid_argument if U is not contained in V.
QuotientMap quotient_map(const Subspace &v, const Subspace &u);

// ---------------------------------------------------------------------------
// Integer lattices

using IntMatrix = std::vector<std::vector<mpz_class>>;

struct HermiteForm {
  IntMatrix basis;  ///< row-style Hermite normal form; rows span the lattice
  std::size_t rank = 0;
};

/// Hermite normal form of the lattice spanned by the given generators (one per
/// row). The result is in row echelon form with positive pivots and the
/// entries above each pivot reduced into [0, pivot); two generator sets span
/// the same lattice iff their forms coincide.
HermiteForm hermite_normal_form(const IntMatrix &generators);
bool lattice_contains(const HermiteForm &h, const std::vector<mpz_class> &v);

} // namespace fig
