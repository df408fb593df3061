#pragma once

/**
 * @file groups.hpp
 * @brief Finite groups given by multiplication tables, and the wreath
 * products G_n = S_n wr G acting as automorphisms of [n] in FI_G.
 *
 * Internally every point of [n] is 0-based. Element 0 of a group is always
 * its identity.
 */

#include <compare>
#include <string>
#include <vector>

namespace fig {

class FiniteGroup {
public:
  FiniteGroup();

  /// Validates a multiplication table; relabels so that the identity is 0.
  /// Throws std::invalid_argument naming the first violated axiom.
  static FiniteGroup from_table(const std::vector<std::vector<int>> &table);
  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);
  static FiniteGroup symmetric3();
  /// "trivial", "Z2", "Z3", "S3" (also "Zn" for small n).
  static FiniteGroup preset(const std::string &name);

  int order() const { return static_cast<int>(mul_.size()); }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  const std::vector<std::vector<int>> &table() const { return mul_; }
  /// Preset name, or "table" for explicit tables.
  const std::string &name() const { return name_; }

  bool operator==(const FiniteGroup &o) const { return mul_ == o.mul_; }

private:
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  std::string name_;
};

/// An element (sigma, g) of G_n: perm[i] = sigma(i), dec[i] = g(i).
struct WreathElement {
  std::vector<int> perm;
  std::vector<int> dec;

  int n() const { return static_cast<int>(perm.size()); }
  static WreathElement identity(int n);
  /// Adjacent transposition s_i exchanging points i and i+1 (0-based i).
  static WreathElement transposition(int n, int i);
  /// Decoration by g at the single point i (0-based), trivial elsewhere.
  static WreathElement decoration(int n, int i, int g);

  auto operator<=>(const WreathElement &) const = default;
  bool operator==(const WreathElement &) const = default;
};

/// x o y under the FI_G composition law:
/// perm = x.perm o y.perm, dec[i] = y.dec[i] * x.dec[y.perm[i]].
WreathElement wreath_compose(const FiniteGroup &g, const WreathElement &x, const WreathElement &y);
WreathElement wreath_inverse(const FiniteGroup &g, const WreathElement &x);
/// Extends x to G_m by fixing the points above x.n() with trivial decoration.
WreathElement wreath_embed(const WreathElement &x, int m);
/// All n!|G|^n elements in lexicographic order of (perm, dec).
std::vector<WreathElement> enumerate_wreath(const FiniteGroup &g, int n);
void validate_wreath(const FiniteGroup &g, const WreathElement &x);

/// A generator of G_n: adjacent transposition s_index (0-based, exchanging
/// index and index+1) or the first-coordinate decoration d_g.
struct GenStep {
  enum class Kind { swap, dec };
  Kind kind;
  int index; ///< transposition index, or group element g != 0
};

/// Word w_0, ..., w_k in the generators with x = w_0 o w_1 o ... o w_k.
std::vector<GenStep> generator_word(const FiniteGroup &g, const WreathElement &x);

} // namespace fig
