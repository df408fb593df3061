#pragma once

/**
 * @file figmodules.hpp
 * @brief FB_G-modules, truncated FI_G-modules, free modules M(W),
 * presentations and their degree-wise realization.
 *
 * Maps between the pieces of modules are stored in row form: an a x b
 * matrix sends the row vector v in k^a to v M in k^b. Vectors are rows and
 * subspaces are spanned by rows, matching Subspace.
 */

#include "fig/exactla.hpp"
#include "fig/figcat.hpp"
#include "fig/groups.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fig {

/// Generators of G_n in the fixed order s_0..s_{n-2}, then d_1..d_{|G|-1} (n >= 1).
std::vector<GenStep> group_generators(const FiniteGroup &g, int n);

/// A representation of G_n given by the actions of its generators.
struct GnRep {
  int n = 0;
  std::size_t dim = 0;
  std::vector<Matrix> swaps; ///< s_0..s_{n-2}
  std::vector<Matrix> decs;  ///< d_g at index g-1; empty when n = 0

  const Matrix &gen(const GenStep &s) const;
};

GnRep zero_rep(const FieldSpec &field, const FiniteGroup &g, int n);
GnRep trivial_rep(const FieldSpec &field, const FiniteGroup &g, int n, std::size_t dim = 1);
/// k[G_n] with basis enumerate_wreath(g, n) and x e_y = e_{x o y}.
GnRep regular_rep(const FieldSpec &field, const FiniteGroup &g, int n);
GnRep direct_sum(const GnRep &a, const GnRep &b);

/// rows -> rows acted on by x.
Matrix act_rows(const FiniteGroup &g, const GnRep &rep, const WreathElement &x, const Matrix &rows);
/// Row form of the action of x.
Matrix rep_matrix(const FieldSpec &field, const FiniteGroup &g, const GnRep &rep,
                  const WreathElement &x);
/// Defining relations of G_n that the generator matrices violate.
std::vector<std::string> validate_rep(const FiniteGroup &g, const GnRep &rep);
/// Action on a G_n-stable subspace, in the basis sub.basis().
GnRep restrict_rep(const GnRep &rep, const Subspace &sub);
/// Action on V/U, in the basis of q.
GnRep quotient_rep(const GnRep &rep, const QuotientMap &q);
/// True if the matrix (row form, dim a x dim b) intertwines a and b.
bool is_equivariant(const GnRep &a, const GnRep &b, const Matrix &map);

struct FBGModule {
  FieldSpec field = FieldSpec::rationals();
  FiniteGroup group;
  std::map<int, GnRep> support; ///< only nonzero degrees

  std::size_t dim(int n) const;
  /// Largest supported degree, or -1 for the zero module.
  int degree() const;
  bool is_zero() const { return support.empty(); }
};

// ---------------------------------------------------------------------------

/// Read access shared by every degree-wise FI_G-module in the library.
class FIGAmbient {
public:
  virtual ~FIGAmbient() = default;
  virtual const FieldSpec &field() const = 0;
  virtual const FiniteGroup &group() const = 0;
  virtual int truncation() const = 0;
  virtual std::size_t dim(int n) const = 0;
  /// Action of a generator of G_n on degree n.
  virtual const Matrix &gen(int n, const GenStep &s) const = 0;
  /// The map from degree n-1 to degree n induced by the increasing injection
  /// whose image misses j (0-based, j < n).
  virtual const Matrix &skip(int n, int j) const = 0;

  const Matrix &transition(int n) const { return skip(n + 1, n); }
  Matrix act(int n, const WreathElement &x, const Matrix &rows) const;
};

/// Induced map of (f,g) : [n] -> [m] on any ambient, in row form.
Matrix induced_map(const FIGAmbient &v, const FIGMorphism &phi);

/// Smallest G_n-stable subspace containing `start` and the given rows.
Subspace gn_closure(const FIGAmbient &v, int n, Subspace start, const Matrix &rows);

/// Sum of the images of the skip maps into degree n, i.e. V_{<n} for V = sub.
Subspace lower_span(const FIGAmbient &v, int n, const Subspace &below);

/// An FI_G-module known in degrees 0..N through the generator actions and
/// the transitions X_n : V_n -> V_{n+1}.
class TruncatedFIGModule : public FIGAmbient {
public:
  TruncatedFIGModule() = default;
  TruncatedFIGModule(FieldSpec field, FiniteGroup group, int truncation, std::vector<GnRep> reps,
                     std::vector<Matrix> transitions);
  /// The zero module.
  static TruncatedFIGModule zero(const FieldSpec &field, const FiniteGroup &group, int truncation);

  const FieldSpec &field() const override { return field_; }
  const FiniteGroup &group() const override { return group_; }
  int truncation() const override { return n_; }
  std::size_t dim(int n) const override;
  const Matrix &gen(int n, const GenStep &s) const override;
  const Matrix &skip(int n, int j) const override;

  const GnRep &rep(int n) const { return reps_.at(n); }
  const std::vector<GnRep> &reps() const { return reps_; }
  const std::vector<Matrix> &transitions() const { return trans_; }
  std::vector<std::size_t> dims() const;
  void set_transition(int n, Matrix x);
  /// Forgets the transitions.
  FBGModule graded() const;

private:
  FieldSpec field_ = FieldSpec::rationals();
  FiniteGroup group_;
  int n_ = 0;
  std::vector<GnRep> reps_;
  std::vector<Matrix> trans_;
  mutable std::vector<std::vector<std::optional<Matrix>>> skips_;
};

/// Structural violations: shapes, group relations, equivariance of the
/// transitions, decorations of the new point, two-step symmetry.
std::vector<std::string> validate(const TruncatedFIGModule &v);

TruncatedFIGModule direct_sum(const TruncatedFIGModule &a, const TruncatedFIGModule &b);
/// Restriction of a module to degrees <= n.
TruncatedFIGModule truncate(const TruncatedFIGModule &v, int n);

// ---------------------------------------------------------------------------

struct FreeBlock {
  int degree = 0;
  GnRep rep;
};

/// M(W) for W = sum of the blocks. Degree n has basis (block, A, k) for A an
/// m-subset of [n] in lexicographic order and k a basis index of the block's
/// W; the vector (A, k) is f_A (x) w_k.
class FreeModule : public FIGAmbient {
public:
  FreeModule() = default;
  FreeModule(FieldSpec field, FiniteGroup group, std::vector<FreeBlock> blocks, int truncation);

  const FieldSpec &field() const override { return field_; }
  const FiniteGroup &group() const override { return group_; }
  int truncation() const override { return n_; }
  std::size_t dim(int n) const override { return dims_.at(n); }
  const Matrix &gen(int n, const GenStep &s) const override;
  const Matrix &skip(int n, int j) const override { return skips_.at(n).at(j); }

  const std::vector<FreeBlock> &blocks() const { return blocks_; }
  std::size_t offset(int n, std::size_t block) const { return offsets_.at(n).at(block); }
  std::size_t index(int n, std::size_t block, const std::vector<int> &subset, std::size_t k) const;
  /// The vector (f,g) (x) w for (f,g) : [m_block] -> [n] and w a row of length dim W.
  Matrix element(std::size_t block, const FIGMorphism &phi, const std::vector<mpq_class> &w) const;
  /// Coordinates (A, k) with A = [n], spanning a complement of M_{<n}.
  std::vector<std::size_t> generator_coords(int n) const;
  /// Coordinates (A, k) at degree n + a with {n, ..., n+a-1} in A.
  std::vector<std::size_t> tail_coords(int n, int a) const;
  TruncatedFIGModule to_module() const;

private:
  FieldSpec field_ = FieldSpec::rationals();
  FiniteGroup group_;
  std::vector<FreeBlock> blocks_;
  int n_ = 0;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<std::size_t>> offsets_;
  std::vector<GnRep> reps_;
  std::vector<std::vector<Matrix>> skips_;
};

/// M(W) realized through degree N.
TruncatedFIGModule build_free(const FBGModule &w, int truncation);

/**
 * Images of the free basis of M(W) under the map determined by W -> V_m,
 * where `w_rows` are the images of the basis of W (dim W x dim V_m). Entry n
 * (for m <= n <= N) has one row per free basis vector (A, k) in FreeModule
 * order; entries below m are empty.
 */
std::vector<Matrix> free_images(const FIGAmbient &v, int m, const Matrix &w_rows);

// ---------------------------------------------------------------------------

/// A degree-wise linear map between modules of equal truncation, in row form.
struct ModuleMorphism {
  std::vector<Matrix> maps;
};

std::vector<std::string> validate_morphism(const FIGAmbient &src, const FIGAmbient &dst,
                                           const ModuleMorphism &phi);

/// The map M(W) -> V extending phi_n : W -> V_n (row form, dim W x dim V_n).
/// Throws std::invalid_argument if phi_n is not equivariant.
ModuleMorphism hom_from_free(const GnRep &w, const TruncatedFIGModule &v, const Matrix &phi_n);

/// Z/B for G-stable, transition-stable subspaces B_n <= Z_n of amb_n.
struct Subquotient {
  TruncatedFIGModule module;
  std::vector<QuotientMap> maps;
};
Subquotient subquotient(const FIGAmbient &amb, const std::vector<Subspace> &z,
                        const std::vector<Subspace> &b, int truncation);
/// As subquotient but without transitions (Z and B need only be G-stable).
FBGModule graded_subquotient(const FIGAmbient &amb, const std::vector<Subspace> &z,
                             const std::vector<Subspace> &b, int truncation);

/// S_b A: degree n is degree n+b of A, with the extra points last.
class ShiftedAmbient : public FIGAmbient {
public:
  ShiftedAmbient(const FIGAmbient &base, int b);
  const FieldSpec &field() const override { return base_.field(); }
  const FiniteGroup &group() const override { return base_.group(); }
  int truncation() const override { return base_.truncation() - b_; }
  std::size_t dim(int n) const override { return base_.dim(n + b_); }
  const Matrix &gen(int n, const GenStep &s) const override { return base_.gen(n + b_, s); }
  const Matrix &skip(int n, int j) const override { return base_.skip(n + b_, j); }

private:
  const FIGAmbient &base_;
  int b_;
};

/// The same module seen only through degree `top`.
class CutAmbient : public FIGAmbient {
public:
  CutAmbient(const FIGAmbient &base, int top);
  const FieldSpec &field() const override { return base_.field(); }
  const FiniteGroup &group() const override { return base_.group(); }
  int truncation() const override { return top_; }
  std::size_t dim(int n) const override { return base_.dim(n); }
  const Matrix &gen(int n, const GenStep &s) const override { return base_.gen(n, s); }
  const Matrix &skip(int n, int j) const override { return base_.skip(n, j); }

private:
  const FIGAmbient &base_;
  int top_;
};

// ---------------------------------------------------------------------------

struct GeneratorSpec {
  int degree = 0;
  GnRep rep;
};

struct RelationTerm {
  std::size_t gen = 0;
  FIGMorphism map; ///< [degree of gen] -> [relation degree]
  std::vector<mpq_class> coeff;
};

struct Relation {
  int degree = 0;
  std::vector<RelationTerm> terms;
};

struct Presentation {
  FieldSpec field = FieldSpec::rationals();
  FiniteGroup group;
  std::vector<GeneratorSpec> generators;
  std::vector<Relation> relations;

  /// Largest generator degree, or -1 without generators.
  int generation_degree() const;
  /// Largest relation degree, or -1 without relations.
  int relation_degree() const;
};

/// Throws std::invalid_argument describing the first malformed part.
void validate_presentation(const Presentation &p);

struct Realization {
  FreeModule cover;
  std::vector<Subspace> relations; ///< K_n inside cover_n
  TruncatedFIGModule module;
  ModuleMorphism quotient;
};

/// Throws std::domain_error("truncation below relation degree") if a relation
/// lives above N.
Realization realize(const Presentation &p, int truncation);

} // namespace fig
