#include "fig/functors.hpp"

#include <stdexcept>

namespace fig {

std::vector<Subspace> full_spaces(const FIGAmbient &v) {
  std::vector<Subspace> out;
  for (int n = 0; n <= v.truncation(); ++n) {
    Subspace s(v.field(), v.dim(n));
    s.insert(Matrix::identity(v.field(), v.dim(n)));
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Subspace> zero_spaces(const FIGAmbient &v) {
  std::vector<Subspace> out;
  for (int n = 0; n <= v.truncation(); ++n)
    out.emplace_back(v.field(), v.dim(n));
  return out;
}

TruncatedFIGModule materialize(const FIGAmbient &v) {
  std::vector<GnRep> reps;
  std::vector<Matrix> trans;
  for (int n = 0; n <= v.truncation(); ++n) {
    GnRep r;
    r.n = n;
    r.dim = v.dim(n);
    for (auto s : group_generators(v.group(), n)) {
      auto &slot = s.kind == GenStep::Kind::swap ? r.swaps : r.decs;
      slot.push_back(v.gen(n, s));
    }
    reps.push_back(std::move(r));
    if (n < v.truncation())
      trans.push_back(v.transition(n));
  }
  return TruncatedFIGModule(v.field(), v.group(), v.truncation(), std::move(reps),
                            std::move(trans));
}

TruncatedFIGModule shift(const FIGAmbient &v, int b) {
  if (b < 0 || b > v.truncation())
    throw std::out_of_range("shift: amount exceeds the truncation");
  return materialize(ShiftedAmbient(v, b));
}

ModuleMorphism iota(const FIGAmbient &v, int b) {
  if (b < 0 || b > v.truncation())
    throw std::out_of_range("iota: amount exceeds the truncation");
  ModuleMorphism out;
  for (int n = 0; n + b <= v.truncation(); ++n) {
    Matrix m = Matrix::identity(v.field(), v.dim(n));
    for (int k = n; k < n + b; ++k)
      m = m * v.transition(k);
    out.maps.push_back(std::move(m));
  }
  return out;
}

TruncatedFIGModule derivative(const FIGAmbient &v, int a) {
  if (a < 1 || a > v.truncation())
    throw std::out_of_range("derivative: power outside the truncation");
  ShiftedAmbient sv(v, a);
  int top = v.truncation() - a;
  std::vector<Subspace> b;
  for (int n = 0; n <= top; ++n) {
    Subspace s(v.field(), v.dim(n + a));
    for (int i = 0; i < a; ++i)
      s.insert(v.skip(n + a, n + i));
    b.push_back(std::move(s));
  }
  return subquotient(sv, full_spaces(sv), b, top).module;
}

TruncatedFIGModule iterated_derivative(const FIGAmbient &v, int a) {
  auto out = derivative(v, 1);
  for (int k = 1; k < a; ++k)
    out = derivative(out, 1);
  return out;
}

FBGModule h0(const FIGAmbient &v) {
  std::vector<Subspace> lower;
  auto full = full_spaces(v);
  for (int n = 0; n <= v.truncation(); ++n)
    lower.push_back(n == 0 ? Subspace(v.field(), v.dim(0)) : lower_span(v, n, full[n - 1]));
  return graded_subquotient(v, full, lower, v.truncation());
}

TruncatedFIGModule iota_kernel(const FIGAmbient &v) {
  if (v.truncation() < 1)
    throw std::out_of_range("iota_kernel: needs truncation >= 1");
  int top = v.truncation() - 1;
  std::vector<Subspace> z;
  for (int n = 0; n <= top; ++n) {
    Subspace s(v.field(), v.dim(n));
    s.insert(left_kernel(v.transition(n)));
    z.push_back(std::move(s));
  }
  std::vector<Subspace> zero;
  for (int n = 0; n <= top; ++n)
    zero.emplace_back(v.field(), v.dim(n));
  CutAmbient cut(v, top);
  return subquotient(cut, z, zero, top).module;
}

TruncatedFIGModule torsion_submodule(const FIGAmbient &v) {
  int big_n = v.truncation();
  std::vector<Subspace> z;
  // Composite X_{N-1} ... X_n built from the top down.
  std::vector<Matrix> to_top(big_n + 1);
  to_top[big_n] = Matrix::identity(v.field(), v.dim(big_n));
  for (int n = big_n - 1; n >= 0; --n)
    to_top[n] = v.transition(n) * to_top[n + 1];
  for (int n = 0; n <= big_n; ++n) {
    Subspace s(v.field(), v.dim(n));
    if (n < big_n)
      s.insert(left_kernel(to_top[n]));
    z.push_back(std::move(s));
  }
  return subquotient(v, z, zero_spaces(v), big_n).module;
}

std::vector<Subspace> image_spaces(const FIGAmbient &dst, const ModuleMorphism &phi) {
  std::vector<Subspace> out;
  for (int n = 0; n <= dst.truncation(); ++n) {
    Subspace s(dst.field(), dst.dim(n));
    if (static_cast<std::size_t>(n) < phi.maps.size())
      s.insert(phi.maps[n]);
    out.push_back(std::move(s));
  }
  return out;
}

TruncatedFIGModule cokernel(const FIGAmbient &dst, const ModuleMorphism &phi) {
  return subquotient(dst, full_spaces(dst), image_spaces(dst, phi), dst.truncation()).module;
}

std::vector<Subspace> kernel_spaces(const FIGAmbient &src, const ModuleMorphism &phi) {
  std::vector<Subspace> out;
  for (int n = 0; n <= src.truncation(); ++n) {
    Subspace s(src.field(), src.dim(n));
    s.insert(left_kernel(phi.maps.at(n)));
    out.push_back(std::move(s));
  }
  return out;
}

TruncatedFIGModule kernel_module(const FIGAmbient &src, const ModuleMorphism &phi) {
  return subquotient(src, kernel_spaces(src, phi), zero_spaces(src), src.truncation()).module;
}

} // namespace fig
