#include "fig/resolution.hpp"

#include <stdexcept>

namespace fig {

GnRep restrict_ambient(const FIGAmbient &v, int n, const Subspace &sub) {
  GnRep r;
  r.n = n;
  r.dim = sub.dim();
  auto basis = sub.basis();
  for (auto s : group_generators(v.group(), n)) {
    auto &slot = s.kind == GenStep::Kind::swap ? r.swaps : r.decs;
    slot.push_back(sub.coordinates(basis * v.gen(n, s)));
  }
  return r;
}

Subspace intersect_coordinates(const Subspace &s, const std::vector<std::size_t> &keep) {
  std::vector<char> kept(s.ambient(), 0);
  for (auto c : keep)
    kept[c] = 1;
  std::vector<std::size_t> other;
  for (std::size_t c = 0; c < s.ambient(); ++c)
    if (!kept[c])
      other.push_back(c);
  auto basis = s.basis();
  Subspace out(s.field(), s.ambient());
  if (basis.rows() == 0)
    return out;
  auto combos = left_kernel(basis.select_cols(other));
  out.insert(combos * basis);
  return out;
}

Matrix project_coordinates(const Matrix &rows, const std::vector<std::size_t> &keep) {
  std::vector<long> map(rows.cols(), -1);
  for (auto c : keep)
    map[c] = static_cast<long>(c);
  return rows.remap_cols(rows.cols(), map);
}

namespace {

std::vector<std::size_t> complement_coords(std::size_t dim, const std::vector<std::size_t> &keep) {
  std::vector<char> kept(dim, 0);
  for (auto c : keep)
    kept[c] = 1;
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < dim; ++c)
    if (!kept[c])
      out.push_back(c);
  return out;
}

Matrix unit_rows(const FieldSpec &field, std::size_t dim, const std::vector<std::size_t> &coords) {
  std::vector<Matrix::Entry> e;
  for (std::size_t r = 0; r < coords.size(); ++r)
    e.push_back({r, coords[r], mpq_class(1)});
  return Matrix::from_entries(field, coords.size(), dim, std::move(e));
}

} // namespace

Resolution::Resolution(TruncatedFIGModule v)
    : v_(std::make_shared<const TruncatedFIGModule>(std::move(v))) {}

const FIGAmbient &Resolution::target(int i) const {
  if (i == 0)
    return *v_;
  return stage(i - 1).free;
}

std::vector<Subspace> Resolution::syzygy_spaces(int i) const {
  if (i == 0)
    return full_spaces(*v_);
  return stage(i - 1).kernel;
}

const ResolutionStage &Resolution::stage(int i) const {
  if (i < 0)
    throw std::out_of_range("resolution stage index must be non-negative");
  while (static_cast<int>(stages_.size()) <= i) {
    int idx = static_cast<int>(stages_.size());
    const FIGAmbient &t = target(idx);
    auto y = syzygy_spaces(idx);
    int big_n = truncation();
    const auto &field = v_->field();
    std::vector<FreeBlock> blocks;
    std::vector<Matrix> lifts;
    for (int n = 0; n <= big_n; ++n) {
      Subspace covered = n == 0 ? Subspace(field, t.dim(0)) : lower_span(t, n, y[n - 1]);
      Subspace w(field, t.dim(n));
      auto basis = y[n].basis();
      for (std::size_t r = 0; r < basis.rows(); ++r) {
        auto row = basis.row(r);
        if (covered.contains(row))
          continue;
        std::size_t before = w.dim();
        w = gn_closure(t, n, std::move(w), row);
        if (w.dim() > before)
          covered.insert(w.basis());
      }
      if (w.dim() == 0)
        continue;
      blocks.push_back({n, restrict_ambient(t, n, w)});
      lifts.push_back(w.basis());
    }
    auto st = std::make_unique<ResolutionStage>();
    st->free = FreeModule(field, v_->group(), blocks, big_n);
    std::vector<std::vector<Matrix>> per_block;
    for (std::size_t b = 0; b < blocks.size(); ++b)
      per_block.push_back(free_images(t, blocks[b].degree, lifts[b]));
    for (int n = 0; n <= big_n; ++n) {
      std::vector<Matrix> parts;
      for (auto &pb : per_block)
        parts.push_back(pb[n]);
      st->images.push_back(Matrix::vstack(parts, t.dim(n), field));
      Subspace k(field, st->free.dim(n));
      k.insert(left_kernel(st->images.back()));
      st->kernel.push_back(std::move(k));
    }
    stages_.push_back(std::move(st));
  }
  return *stages_[i];
}

FBGModule Resolution::generators(int i) const {
  FBGModule out;
  out.field = v_->field();
  out.group = v_->group();
  for (const auto &b : stage(i).free.blocks())
    out.support[b.degree] = b.rep;
  return out;
}

TruncatedFIGModule Resolution::syzygy(int i) const {
  if (i < 1)
    throw std::out_of_range("syzygy index must be positive");
  const auto &amb = stage(i - 1).free;
  return subquotient(amb, stage(i - 1).kernel, zero_spaces(amb), truncation()).module;
}

FBGModule Resolution::homology(int i) const {
  if (i == 0)
    return h0(*v_);
  const auto &amb = stage(i - 1).free;
  const auto &x = stage(i - 1).kernel;
  std::vector<Subspace> z, b;
  for (int n = 0; n <= truncation(); ++n) {
    auto lower = complement_coords(amb.dim(n), amb.generator_coords(n));
    z.push_back(intersect_coordinates(x[n], lower));
    b.push_back(n == 0 ? Subspace(amb.field(), amb.dim(0)) : lower_span(amb, n, x[n - 1]));
  }
  return graded_subquotient(amb, z, b, truncation());
}

std::vector<std::size_t> Resolution::homology_dims(int i) const {
  auto h = homology(i);
  std::vector<std::size_t> out;
  for (int n = 0; n <= truncation(); ++n)
    out.push_back(h.dim(n));
  return out;
}

TruncatedFIGModule Resolution::derived_derivative(int i, int a) const {
  if (a < 1 || a > truncation())
    throw std::out_of_range("derived_derivative: power outside the truncation");
  if (i == 0)
    return derivative(*v_, a);
  const auto &st = stage(i);
  const auto &below = stage(i - 1).free;
  int top = truncation() - a;
  std::vector<Subspace> z, b;
  for (int n = 0; n <= top; ++n) {
    int t = n + a;
    auto tf = st.free.tail_coords(n, a);
    auto tt = below.tail_coords(n, a);
    auto d = st.images[t].select_rows(tf).select_cols(tt);
    auto c = left_kernel(d);
    std::vector<long> map(tf.begin(), tf.end());
    auto lower = unit_rows(v_->field(), st.free.dim(t), complement_coords(st.free.dim(t), tf));
    Subspace zn(v_->field(), st.free.dim(t));
    zn.insert(lower);
    zn.insert(c.remap_cols(st.free.dim(t), map));
    z.push_back(std::move(zn));
    Subspace bn(v_->field(), st.free.dim(t));
    bn.insert(lower);
    bn.insert(st.kernel[t].basis());
    b.push_back(std::move(bn));
  }
  ShiftedAmbient sh(st.free, a);
  return subquotient(sh, z, b, top).module;
}

FBGModule homology(const TruncatedFIGModule &v, int i) { return Resolution(v).homology(i); }

TruncatedFIGModule derived_derivative(const TruncatedFIGModule &v, int i, int a) {
  return Resolution(v).derived_derivative(i, a);
}

TruncatedFIGModule h1da_intersection(const FreeModule &m, const std::vector<Subspace> &k, int a) {
  int big_n = m.truncation();
  if (a < 1 || a > big_n)
    throw std::out_of_range("h1da_intersection: power outside the truncation");
  if (k.size() != static_cast<std::size_t>(big_n) + 1)
    throw std::invalid_argument("h1da_intersection: submodule must be given in every degree");
  int top = big_n - a;
  std::vector<Subspace> z, b;
  for (int n = 0; n <= top; ++n) {
    int t = n + a;
    auto tail = m.tail_coords(n, a);
    z.push_back(intersect_coordinates(k[t], complement_coords(m.dim(t), tail)));
    Subspace bn(m.field(), m.dim(t));
    if (t >= 1) {
      auto basis = k[t - 1].basis();
      for (int i = 0; i < a; ++i)
        bn.insert(basis * m.skip(t, n + i));
    }
    b.push_back(std::move(bn));
  }
  ShiftedAmbient sh(m, a);
  return subquotient(sh, z, b, top).module;
}

TruncatedFIGModule h1da_intersection(const Presentation &p, int a, int truncation) {
  auto r = realize(p, truncation);
  return h1da_intersection(r.cover, r.relations, a);
}

} // namespace fig
