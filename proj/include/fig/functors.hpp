#pragma once

/**
 * @file functors.hpp
 * @brief Shift, the maps iota_b, derivatives D^a and H_0 on truncated modules.
 */

#include "fig/figmodules.hpp"

namespace fig {

/// Explicit copy of any ambient as a truncated module.
TruncatedFIGModule materialize(const FIGAmbient &v);

/// S_b V, with truncation N - b. The b new points come last.
TruncatedFIGModule shift(const FIGAmbient &v, int b);

/// iota_b : V -> S_b V; degree n is the induced map of [n] -> [n+b], for n <= N - b.
ModuleMorphism iota(const FIGAmbient &v, int b);

/// D^a V_n = V_{n+a} / (images of the injections missing n+1, ..., n+a), truncation N - a.
TruncatedFIGModule derivative(const FIGAmbient &v, int a);
/// D applied a times; agrees with derivative(v, a).
TruncatedFIGModule iterated_derivative(const FIGAmbient &v, int a);

/// H_0(V)_n = V_n / V_{<n}.
FBGModule h0(const FIGAmbient &v);

/// ker iota_1 as a submodule of V, truncation N - 1.
TruncatedFIGModule iota_kernel(const FIGAmbient &v);

/// Elements of V_n killed by X_{N-1} ... X_n. Within the truncation this is
/// the torsion submodule; it is exact once torsion dies before degree N.
TruncatedFIGModule torsion_submodule(const FIGAmbient &v);

/// Image of a module morphism as a submodule of the target, and the
/// corresponding quotient.
std::vector<Subspace> image_spaces(const FIGAmbient &dst, const ModuleMorphism &phi);
TruncatedFIGModule cokernel(const FIGAmbient &dst, const ModuleMorphism &phi);
std::vector<Subspace> kernel_spaces(const FIGAmbient &src, const ModuleMorphism &phi);
TruncatedFIGModule kernel_module(const FIGAmbient &src, const ModuleMorphism &phi);

/// Whole space in every degree.
std::vector<Subspace> full_spaces(const FIGAmbient &v);
std::vector<Subspace> zero_spaces(const FIGAmbient &v);

} // namespace fig
