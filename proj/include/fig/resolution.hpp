#pragma once

/**
 * @file resolution.hpp
 * @brief Free resolutions by modules M(W), the homology H_i and the derived
 * functors H_i^{D^a}, the latter both from a resolution and from the
 * intersection formula on a pair K <= M with M free.
 */

#include "fig/figmodules.hpp"
#include "fig/functors.hpp"

#include <memory>
#include <vector>

namespace fig {

/// One spot of a resolution: d_i : F_i -> T_i, where T_0 = V and T_i = F_{i-1}.
struct ResolutionStage {
  FreeModule free;
  /// images[n]: one row per basis vector of F_{i,n}, in coordinates of T_{i,n}.
  std::vector<Matrix> images;
  /// kernel[n] = X_{i+1,n} inside F_{i,n}.
  std::vector<Subspace> kernel;
};

/**
 * Resolution of V by modules M(W), exact in every degree <= N. Stages are
 * built on demand. W_{i,n} is the G_n-span of lifts of a basis of
 * X_{i,n} / X_{i,<n}; it surjects onto H_0(X_i)_n but need not be minimal.
 */
class Resolution {
public:
  explicit Resolution(TruncatedFIGModule v);

  const TruncatedFIGModule &module() const { return *v_; }
  int truncation() const { return v_->truncation(); }
  const ResolutionStage &stage(int i) const;
  /// W_i as an FB_G-module.
  FBGModule generators(int i) const;
  /// X_i inside T_{i-1}; X_0 is V itself.
  std::vector<Subspace> syzygy_spaces(int i) const;
  /// X_i as a module (i >= 1), a submodule of F_{i-1}.
  TruncatedFIGModule syzygy(int i) const;

  /// H_i(V) in degrees <= N.
  FBGModule homology(int i) const;
  /// dim H_i(V)_n for n <= N.
  std::vector<std::size_t> homology_dims(int i) const;

  /// H_i^{D^a}(V) in degrees <= N - a (for i = 0 this is D^a V).
  TruncatedFIGModule derived_derivative(int i, int a) const;

private:
  const FIGAmbient &target(int i) const;
  std::shared_ptr<const TruncatedFIGModule> v_;
  mutable std::vector<std::unique_ptr<ResolutionStage>> stages_;
};

/// Convenience wrappers.
FBGModule homology(const TruncatedFIGModule &v, int i);
TruncatedFIGModule derived_derivative(const TruncatedFIGModule &v, int i, int a);

/**
 * H_1^{D^a}(M/K)_n = (K_{n+a} cap sum_i M_{n+a-{n+i}}) / sum_i K_{n+a-{n+i}}
 * for a free M and submodule K known through degree N; result has truncation
 * N - a.
 */
TruncatedFIGModule h1da_intersection(const FreeModule &m, const std::vector<Subspace> &k, int a);
/// Same, from a presentation realized at truncation N.
TruncatedFIGModule h1da_intersection(const Presentation &p, int a, int truncation);

/// Lift a G_n-stable subspace of an ambient to a representation in its basis.
GnRep restrict_ambient(const FIGAmbient &v, int n, const Subspace &sub);

/// Rows of the subspace whose coordinates outside `keep` vanish.
Subspace intersect_coordinates(const Subspace &s, const std::vector<std::size_t> &keep);
/// Rows projected onto the coordinates in `keep` (others zeroed).
Matrix project_coordinates(const Matrix &rows, const std::vector<std::size_t> &keep);

} // namespace fig
