#pragma once

/**
 * @file invariants.hpp
 * @brief Homological degrees, torsion, depth, derived regularity, regularity,
 * Nagpal number, sharp filtrations and Hilbert polynomials of truncated
 * modules, each with the truncation needed to certify it.
 *
 * Certification windows are expressed through the declared generating degree
 * d and relation degree r (r = -1 without relations) via s = r + min(r, d):
 *   hd_0: N >= d        hd_1: N >= r        hd_i (i >= 2): N >= s - 1 + i
 *   torsion, dreg/dwidth, depth: N >= s (plus the range of a scanned)
 *   Nagpal number: N >= s + r           Hilbert polynomial: N >= s + d + 1
 */

#include "fig/resolution.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fig {

/// An integer or one of +-infinity.
struct ExtInt {
  enum class Kind { neg_inf, finite, pos_inf };
  Kind kind = Kind::neg_inf;
  long value = 0;

  static ExtInt neg_inf() { return {}; }
  static ExtInt pos_inf() { return {Kind::pos_inf, 0}; }
  static ExtInt of(long v) { return {Kind::finite, v}; }
  bool finite() const { return kind == Kind::finite; }
  std::string str() const;
  /// Finite values shifted by k; infinities unchanged.
  ExtInt plus(long k) const;

  friend std::strong_ordering operator<=>(const ExtInt &a, const ExtInt &b);
  friend bool operator==(const ExtInt &a, const ExtInt &b) { return (a <=> b) == 0; }
};
ExtInt max(ExtInt a, ExtInt b);
ExtInt min(ExtInt a, ExtInt b);

/// Largest n with dims[n] != 0, or -infinity.
ExtInt degree_of(const std::vector<std::size_t> &dims);

template <class T> struct Certified {
  T value;
  bool certified = true;
};

enum class Invariant { degrees, torsion, depth, derived_regularity, regularity, nagpal, hilbert, filtration };
const std::vector<Invariant> &all_invariants();
std::string invariant_name(Invariant inv);
std::optional<Invariant> parse_invariant(const std::string &name);

/// r + min(r, d) with negative degrees read as 0.
int stable_start(int d, int r);
/// Truncation certifying hd_i.
int homology_window(int i, int d, int r);
/// Least truncation at which `inv` is certified for generating degree d and
/// relation degree r.
int required_truncation(Invariant inv, int d, int r, int i_max = 3);

struct TorsionInfo {
  bool torsion_free = true;
  std::vector<std::size_t> dims;
  bool certified = true;
};

struct DerivedRegularity {
  ExtInt dreg, dwidth;
  /// deg H_1^{D^a}(V) for a = 1..a_max.
  std::vector<ExtInt> degrees;
  int a_max = 0;
  bool certified = true;
};

struct NagpalInfo {
  /// Least b with H_1(S_b V) = 0; when uncertified, a lower bound.
  ExtInt direct;
  /// 0 when V is sharp filtered, dreg + 1 otherwise.
  ExtInt from_dreg;
  bool certified = true;
};

struct FiltrationStep {
  int degree = 0;
  std::size_t dim = 0;
};

struct Filtration {
  bool h1_vanishes = false;
  bool constructed = false;
  /// Cofactors M(W) in the order they were split off.
  std::vector<FiltrationStep> cofactors;
  /// Degree at which M(Q_i) -> Q failed to inject, when it did.
  int failed_degree = -1;
  int failed_step = -1;
  /// Cofactor dims equal those of H_0(V).
  bool matches_h0 = false;
  bool certified = true;
};

struct HilbertInfo {
  std::vector<std::size_t> values;
  /// Coefficients of P in the monomial basis, constant term first.
  std::optional<std::vector<mpq_class>> polynomial;
  int start = 0;
  /// hd_1 + min(hd_1, hd_0), the start computed from homological degrees.
  int homological_start = 0;
  /// Degrees n >= start, n <= N, where P(n) != dim V_n.
  std::vector<int> disagreements;
  /// Least m with P(n) = dim V_n for all m <= n <= N.
  std::optional<int> earliest_agreement;
  int required = 0;
  bool certified = true;
};

mpq_class evaluate(const std::vector<mpq_class> &poly, long x);
std::vector<mpq_class> interpolate(const std::vector<long> &xs, const std::vector<mpq_class> &ys);
std::string polynomial_string(const std::vector<mpq_class> &poly, const std::string &var = "n");

/**
 * Everything the library knows about one module. Results are computed on
 * demand and cached; the resolution is shared by all of them.
 */
class Analysis {
public:
  Analysis(const Presentation &p, int truncation);
  /// Degrees d and r are taken from the module itself: d = hd_0, r = hd_1.
  explicit Analysis(TruncatedFIGModule v);
  Analysis(TruncatedFIGModule v, int d, int r);

  const TruncatedFIGModule &module() const { return res_->module(); }
  const std::optional<Realization> &realization() const { return real_; }
  const Resolution &resolution() const { return *res_; }
  int truncation() const { return module().truncation(); }
  int generation_degree() const { return d_; }
  int relation_degree() const { return r_; }
  bool declared() const { return declared_; }
  int stable_start() const { return fig::stable_start(d_, r_); }
  bool certifies(Invariant inv, int i_max = 3) const;

  std::vector<std::size_t> dims() const { return module().dims(); }
  /// deg V; uncertified when V_N != 0.
  Certified<ExtInt> module_degree() const;
  const std::vector<std::size_t> &homology_dims(int i) const;
  Certified<ExtInt> hd(int i) const;
  /// dims of H_i^{D^a}(V) in degrees <= N - a.
  const std::vector<std::size_t> &derived_dims(int i, int a) const;

  TorsionInfo torsion() const;
  Certified<ExtInt> depth() const;
  DerivedRegularity derived_regularity() const;
  /// max over 1 <= i <= i_max of hd_i - i.
  Certified<ExtInt> regularity(int i_max = 3) const;
  /// The bound r + min(r,d) - 1 from the declared and from the
  /// homological degrees.
  ExtInt regularity_bound() const;
  ExtInt regularity_bound_homological() const;
  NagpalInfo nagpal() const;
  Filtration sharp_filtration() const;
  HilbertInfo hilbert() const;

private:
  std::optional<Realization> real_;
  std::shared_ptr<Resolution> res_;
  int d_ = -1, r_ = -1;
  bool declared_ = false;
  mutable std::map<int, std::vector<std::size_t>> hdims_;
  mutable std::map<std::pair<int, int>, std::vector<std::size_t>> ddims_;
  mutable std::optional<DerivedRegularity> dreg_;
};

} // namespace fig
