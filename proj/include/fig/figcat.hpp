#pragma once

/**
 * @file figcat.hpp
 * @brief Morphisms of FI_G, their enumeration and composition, and the
 * combinatorics of the subsets Sigma(b) and the elements J_S of Z[G_n].
 *
 * Points are 0-based internally; the subsets returned by sigma() and the
 * arguments of the verifiers are 1-based as in the literature.
 */

#include "fig/exactla.hpp"
#include "fig/groups.hpp"

#include <map>
#include <vector>

namespace fig {

/// A morphism (f, g): [src] -> [dst]; inj[i] = f(i), dec[i] = g(i).
struct FIGMorphism {
  int src = 0;
  int dst = 0;
  std::vector<int> inj;
  std::vector<int> dec;

  static FIGMorphism identity(int n);
  /// The standard inclusion [n] -> [m] with trivial decoration.
  static FIGMorphism standard(int n, int m);
  /// The increasing injection with image `subset` (sorted, 0-based).
  static FIGMorphism from_subset(const std::vector<int> &subset, int m);
  static FIGMorphism from_wreath(const WreathElement &x);

  auto operator<=>(const FIGMorphism &) const = default;
  bool operator==(const FIGMorphism &) const = default;
};

void validate_morphism(const FiniteGroup &g, const FIGMorphism &f);

/// All morphisms [n] -> [m], lexicographic in (inj, dec).
std::vector<FIGMorphism> enumerate_hom(int n, int m, const FiniteGroup &g);
/// outer o inner.
FIGMorphism compose_morphisms(const FiniteGroup &g, const FIGMorphism &outer,
                              const FIGMorphism &inner);
/// One representative per right G_n-orbit of Hom([n],[m]): increasing
/// injections with trivial decoration, in lexicographic order of images.
std::vector<FIGMorphism> orbit_representatives(int n, int m, const FiniteGroup &g);

/// Splits (f,g) = f_A o (tau, h) with f_A increasing onto A = im f.
struct Factorization {
  std::vector<int> image; ///< sorted image of f
  WreathElement aut;      ///< (tau, h) in G_src
};
Factorization factor_morphism(const FIGMorphism &f);

/// k-element subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k);
long binomial(long n, long k);
/// Position of a sorted subset in subsets(n, k).
std::size_t subset_rank(const std::vector<int> &subset, int n);

// ---------------------------------------------------------------------------
// Sigma(b) and group-algebra elements

struct SigmaSet {
  int b = 0;
  std::vector<std::vector<int>> subsets; ///< 1-based, sorted, lexicographic
};

SigmaSet sigma(int b);
/// Members of Sigma(b) containing {1..a}; requires 1 <= a <= b.
SigmaSet sigma_ab(int a, int b);
bool in_sigma(const std::vector<int> &sorted_subset_1based);

struct GroupAlgebraElement {
  int n = 0;
  std::map<WreathElement, long> terms; ///< no zero coefficients

  GroupAlgebraElement multiply(const FiniteGroup &g, const GroupAlgebraElement &rhs) const;
  static GroupAlgebraElement unit(int n);
  /// J_i^j = (id,1) - ((i j),1), with 1-based i != j.
  static GroupAlgebraElement j_element(int n, int i, int j);
};

/// J_S = prod_p J_{s_p}^{t_p} for S a b-subset of [2b] (1-based), in Z[G_n].
GroupAlgebraElement j_product(const std::vector<int> &s, int n, const FiniteGroup &g);

/// The lexicographic orbit property for one instance (all 1-based):
/// if S is in Sigma(b), U is lexicographically first in its orbit under the
/// group generated by the transpositions (idx_p, s_p).
bool verify_lex_first(const std::vector<int> &s, const std::vector<int> &u,
                      const std::vector<int> &idx, int n);

struct SpanIdentityReport {
  bool span_identity = false;  ///< F = I_b F + F^b over Z
  bool annihilation = false;   ///< I_{r+1} kills Z[Hom([r],[n])]
  bool vanishing = false;      ///< J products vanish when im f misses a pair
  std::size_t lattice_rank = 0;
  std::size_t ambient_rank = 0;
  bool all() const { return span_identity && annihilation && vanishing; }
};

/// Decides F = I_b F + F^b exactly by Hermite normal form, where
/// F = Z[Hom([r],[n])]; requires n >= b + r. Also runs the annihilation
/// and vanishing sub-checks.
SpanIdentityReport verify_span_identity(int r, int n, int b, const FiniteGroup &g);

} // namespace fig
