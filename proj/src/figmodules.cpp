#include "fig/figmodules.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace fig {

std::vector<GenStep> group_generators(const FiniteGroup &g, int n) {
  std::vector<GenStep> out;
  for (int i = 0; i + 1 < n; ++i)
    out.push_back({GenStep::Kind::swap, i});
  if (n >= 1)
    for (int h = 1; h < g.order(); ++h)
      out.push_back({GenStep::Kind::dec, h});
  return out;
}

namespace {

WreathElement as_element(int n, const GenStep &s) {
  return s.kind == GenStep::Kind::swap ? WreathElement::transposition(n, s.index)
                                       : WreathElement::decoration(n, 0, s.index);
}

std::string gen_name(const GenStep &s) {
  return (s.kind == GenStep::Kind::swap ? "s_" : "d_") + std::to_string(s.index);
}

Subspace full_space(const FieldSpec &f, std::size_t n) {
  Subspace s(f, n);
  s.insert(Matrix::identity(f, n));
  return s;
}

} // namespace

const Matrix &GnRep::gen(const GenStep &s) const {
  if (s.kind == GenStep::Kind::swap)
    return swaps.at(s.index);
  return decs.at(s.index - 1);
}

GnRep trivial_rep(const FieldSpec &field, const FiniteGroup &g, int n, std::size_t dim) {
  GnRep r;
  r.n = n;
  r.dim = dim;
  for (auto s : group_generators(g, n)) {
    auto &slot = s.kind == GenStep::Kind::swap ? r.swaps : r.decs;
    slot.push_back(Matrix::identity(field, dim));
  }
  return r;
}

GnRep zero_rep(const FieldSpec &field, const FiniteGroup &g, int n) {
  return trivial_rep(field, g, n, 0);
}

GnRep regular_rep(const FieldSpec &field, const FiniteGroup &g, int n) {
  auto elems = enumerate_wreath(g, n);
  std::map<WreathElement, long> index;
  for (std::size_t k = 0; k < elems.size(); ++k)
    index[elems[k]] = static_cast<long>(k);
  GnRep r;
  r.n = n;
  r.dim = elems.size();
  for (auto s : group_generators(g, n)) {
    auto x = as_element(n, s);
    std::vector<long> map(elems.size());
    for (std::size_t k = 0; k < elems.size(); ++k)
      map[k] = index.at(wreath_compose(g, x, elems[k]));
    auto &slot = s.kind == GenStep::Kind::swap ? r.swaps : r.decs;
    slot.push_back(Matrix::from_index_map(field, elems.size(), map));
  }
  return r;
}

GnRep direct_sum(const GnRep &a, const GnRep &b) {
  if (a.n != b.n || a.swaps.size() != b.swaps.size() || a.decs.size() != b.decs.size())
    throw std::invalid_argument("direct sum of representations of different groups");
  GnRep r;
  r.n = a.n;
  r.dim = a.dim + b.dim;
  for (std::size_t i = 0; i < a.swaps.size(); ++i)
    r.swaps.push_back(Matrix::block_diag(a.swaps[i], b.swaps[i]));
  for (std::size_t i = 0; i < a.decs.size(); ++i)
    r.decs.push_back(Matrix::block_diag(a.decs[i], b.decs[i]));
  return r;
}

Matrix act_rows(const FiniteGroup &g, const GnRep &rep, const WreathElement &x, const Matrix &rows) {
  if (x.n() != rep.n)
    throw std::invalid_argument("group element and representation have different arity");
  auto word = generator_word(g, x);
  Matrix out = rows;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out = out * rep.gen(*it);
  return out;
}

Matrix rep_matrix(const FieldSpec &field, const FiniteGroup &g, const GnRep &rep,
                  const WreathElement &x) {
  return act_rows(g, rep, x, Matrix::identity(field, rep.dim));
}

std::vector<std::string> validate_rep(const FiniteGroup &g, const GnRep &rep) {
  std::vector<std::string> out;
  std::string where = " at degree " + std::to_string(rep.n);
  std::size_t want_swaps = rep.n >= 2 ? rep.n - 1 : 0;
  std::size_t want_decs = rep.n >= 1 ? g.order() - 1 : 0;
  if (rep.swaps.size() != want_swaps || rep.decs.size() != want_decs) {
    out.push_back("wrong number of generator matrices" + where);
    return out;
  }
  for (const auto *list : {&rep.swaps, &rep.decs})
    for (const auto &m : *list)
      if (m.rows() != rep.dim || m.cols() != rep.dim) {
        out.push_back("generator matrix has wrong shape" + where);
        return out;
      }
  if (rep.dim == 0 || (rep.swaps.empty() && rep.decs.empty()))
    return out;
  const auto &s = rep.swaps;
  auto id = Matrix::identity(s.empty() ? rep.decs[0].field() : s[0].field(), rep.dim);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!(s[i] * s[i] == id))
      out.push_back("s_" + std::to_string(i) + " is not an involution" + where);
    if (i + 1 < s.size() && !(s[i] * s[i + 1] * s[i] == s[i + 1] * s[i] * s[i + 1]))
      out.push_back("braid relation fails for s_" + std::to_string(i) + where);
    for (std::size_t j = i + 2; j < s.size(); ++j)
      if (!(s[i] * s[j] == s[j] * s[i]))
        out.push_back("s_" + std::to_string(i) + " and s_" + std::to_string(j) +
                      " do not commute" + where);
  }
  auto dec = [&](int h) -> Matrix { return h == 0 ? id : rep.decs[h - 1]; };
  for (int a = 1; a < g.order(); ++a) {
    for (int b = 1; b < g.order(); ++b) {
      // d_a o d_b = d_{b a} under the composition law.
      if (!(dec(b) * dec(a) == dec(g.mul(b, a))))
        out.push_back("decorations d_" + std::to_string(a) + ", d_" + std::to_string(b) +
                      " do not compose as in G" + where);
      if (!s.empty()) {
        auto c = s[0] * dec(b) * s[0];
        if (!(dec(a) * c == c * dec(a)))
          out.push_back("decorations at points 1 and 2 do not commute" + where);
      }
    }
    for (std::size_t i = 1; i < s.size(); ++i)
      if (!(s[i] * dec(a) == dec(a) * s[i]))
        out.push_back("d_" + std::to_string(a) + " does not commute with s_" + std::to_string(i) +
                      where);
  }
  return out;
}

GnRep restrict_rep(const GnRep &rep, const Subspace &sub) {
  GnRep r;
  r.n = rep.n;
  r.dim = sub.dim();
  auto basis = sub.basis();
  for (const auto &m : rep.swaps)
    r.swaps.push_back(sub.coordinates(basis * m));
  for (const auto &m : rep.decs)
    r.decs.push_back(sub.coordinates(basis * m));
  return r;
}

GnRep quotient_rep(const GnRep &rep, const QuotientMap &q) {
  GnRep r;
  r.n = rep.n;
  r.dim = q.dim;
  auto lift = q.lift();
  for (const auto &m : rep.swaps)
    r.swaps.push_back(q.project(lift * m));
  for (const auto &m : rep.decs)
    r.decs.push_back(q.project(lift * m));
  return r;
}

bool is_equivariant(const GnRep &a, const GnRep &b, const Matrix &map) {
  if (a.n != b.n || map.rows() != a.dim || map.cols() != b.dim)
    return false;
  for (std::size_t i = 0; i < a.swaps.size(); ++i)
    if (!(a.swaps[i] * map == map * b.swaps[i]))
      return false;
  for (std::size_t i = 0; i < a.decs.size(); ++i)
    if (!(a.decs[i] * map == map * b.decs[i]))
      return false;
  return true;
}

std::size_t FBGModule::dim(int n) const {
  auto it = support.find(n);
  return it == support.end() ? 0 : it->second.dim;
}

int FBGModule::degree() const { return support.empty() ? -1 : support.rbegin()->first; }

// ---------------------------------------------------------------------------

Matrix FIGAmbient::act(int n, const WreathElement &x, const Matrix &rows) const {
  if (x.n() != n)
    throw std::invalid_argument("group element arity differs from degree");
  auto word = generator_word(group(), x);
  Matrix out = rows;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out = out * gen(n, *it);
  return out;
}

Matrix induced_map(const FIGAmbient &v, const FIGMorphism &phi) {
  validate_morphism(v.group(), phi);
  int n = phi.src, m = phi.dst;
  if (m > v.truncation())
    throw std::out_of_range("induced_map: arity above truncation");
  Matrix rows = Matrix::identity(v.field(), v.dim(n));
  for (int k = n; k < m; ++k)
    rows = rows * v.transition(k);
  WreathElement tau;
  tau.perm = phi.inj;
  tau.dec = phi.dec;
  std::vector<char> used(m, 0);
  for (int x : phi.inj)
    used[x] = 1;
  for (int p = 0; p < m; ++p)
    if (!used[p]) {
      tau.perm.push_back(p);
      tau.dec.push_back(0);
    }
  return v.act(m, tau, rows);
}

Subspace gn_closure(const FIGAmbient &v, int n, Subspace start, const Matrix &rows) {
  auto gens = group_generators(v.group(), n);
  std::deque<Matrix> work;
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    auto r = rows.row(i);
    if (start.insert(r))
      work.push_back(std::move(r));
  }
  while (!work.empty()) {
    // Process the whole frontier at once so each generator costs one product.
    std::vector<Matrix> batch(work.begin(), work.end());
    work.clear();
    auto frontier = Matrix::vstack(batch, v.dim(n), v.field());
    for (const auto &s : gens) {
      auto img = frontier * v.gen(n, s);
      for (std::size_t i = 0; i < img.rows(); ++i) {
        auto r = img.row(i);
        if (start.insert(r))
          work.push_back(std::move(r));
      }
    }
  }
  return start;
}

Subspace lower_span(const FIGAmbient &v, int n, const Subspace &below) {
  Subspace out(v.field(), v.dim(n));
  if (n == 0 || below.dim() == 0)
    return out;
  auto basis = below.basis();
  for (int j = 0; j < n; ++j)
    out.insert(basis * v.skip(n, j));
  return out;
}

// ---------------------------------------------------------------------------

TruncatedFIGModule::TruncatedFIGModule(FieldSpec field, FiniteGroup group, int truncation,
                                       std::vector<GnRep> reps, std::vector<Matrix> transitions)
    : field_(field), group_(std::move(group)), n_(truncation), reps_(std::move(reps)),
      trans_(std::move(transitions)) {
  if (truncation < 0)
    throw std::invalid_argument("truncation must be non-negative");
  if (reps_.size() != static_cast<std::size_t>(truncation) + 1 ||
      trans_.size() != static_cast<std::size_t>(truncation))
    throw std::invalid_argument("module needs N+1 representations and N transitions");
}

TruncatedFIGModule TruncatedFIGModule::zero(const FieldSpec &field, const FiniteGroup &group,
                                            int truncation) {
  std::vector<GnRep> reps;
  std::vector<Matrix> trans;
  for (int n = 0; n <= truncation; ++n) {
    reps.push_back(zero_rep(field, group, n));
    if (n < truncation)
      trans.emplace_back(field, 0, 0);
  }
  return TruncatedFIGModule(field, group, truncation, std::move(reps), std::move(trans));
}

std::size_t TruncatedFIGModule::dim(int n) const { return reps_.at(n).dim; }

const Matrix &TruncatedFIGModule::gen(int n, const GenStep &s) const { return reps_.at(n).gen(s); }

const Matrix &TruncatedFIGModule::skip(int n, int j) const {
  if (n < 1 || n > n_ || j < 0 || j >= n)
    throw std::out_of_range("skip map outside the truncation");
  if (skips_.size() != reps_.size())
    skips_.assign(reps_.size(), {});
  auto &row = skips_[n];
  if (row.empty())
    row.resize(n);
  if (!row[j]) {
    // The injection missing j is s_j composed with the one missing j+1.
    if (j == n - 1)
      row[j] = trans_[n - 1];
    else
      row[j] = skip(n, j + 1) * gen(n, {GenStep::Kind::swap, j});
  }
  return *row[j];
}

std::vector<std::size_t> TruncatedFIGModule::dims() const {
  std::vector<std::size_t> out;
  for (const auto &r : reps_)
    out.push_back(r.dim);
  return out;
}

void TruncatedFIGModule::set_transition(int n, Matrix x) {
  trans_.at(n) = std::move(x);
  skips_.clear();
}

FBGModule TruncatedFIGModule::graded() const {
  FBGModule out;
  out.field = field_;
  out.group = group_;
  for (int n = 0; n <= n_; ++n)
    if (reps_[n].dim > 0)
      out.support[n] = reps_[n];
  return out;
}

std::vector<std::string> validate(const TruncatedFIGModule &v) {
  std::vector<std::string> out;
  int big_n = v.truncation();
  bool shapes_ok = true;
  for (int n = 0; n <= big_n; ++n) {
    if (v.rep(n).n != n) {
      out.push_back("representation at degree " + std::to_string(n) + " has wrong arity");
      shapes_ok = false;
      continue;
    }
    auto msgs = validate_rep(v.group(), v.rep(n));
    out.insert(out.end(), msgs.begin(), msgs.end());
    if (!msgs.empty())
      shapes_ok = false;
  }
  std::vector<char> good(big_n, 0);
  for (int n = 0; n < big_n; ++n) {
    const auto &x = v.transitions()[n];
    if (x.rows() != v.dim(n) || x.cols() != v.dim(n + 1)) {
      out.push_back("transition X_" + std::to_string(n) + " has shape " +
                    std::to_string(x.rows()) + "x" + std::to_string(x.cols()) + ", expected " +
                    std::to_string(v.dim(n)) + "x" + std::to_string(v.dim(n + 1)));
      continue;
    }
    good[n] = 1;
  }
  if (!shapes_ok)
    return out;
  const auto &g = v.group();
  for (int n = 0; n < big_n; ++n) {
    if (!good[n])
      continue;
    const auto &x = v.transitions()[n];
    for (auto s : group_generators(g, n))
      if (!(v.gen(n, s) * x == x * v.gen(n + 1, s)))
        out.push_back("X_" + std::to_string(n) + " is not equivariant for " + gen_name(s));
    for (int h = 1; h < g.order(); ++h) {
      auto y = WreathElement::decoration(n + 1, n, h);
      if (!(act_rows(g, v.rep(n + 1), y, x) == x))
        out.push_back("decoration of the new point moves the image of X_" + std::to_string(n));
    }
    if (n + 1 < big_n && good[n + 1]) {
      auto p = x * v.transitions()[n + 1];
      if (!(p * v.gen(n + 2, {GenStep::Kind::swap, n}) == p))
        out.push_back("two-step symmetry fails at n=" + std::to_string(n));
    }
  }
  return out;
}

TruncatedFIGModule direct_sum(const TruncatedFIGModule &a, const TruncatedFIGModule &b) {
  if (!(a.field() == b.field()) || !(a.group() == b.group()) || a.truncation() != b.truncation())
    throw std::invalid_argument("direct_sum: modules differ in field, group or truncation");
  std::vector<GnRep> reps;
  std::vector<Matrix> trans;
  for (int n = 0; n <= a.truncation(); ++n) {
    reps.push_back(direct_sum(a.rep(n), b.rep(n)));
    if (n < a.truncation())
      trans.push_back(Matrix::block_diag(a.transitions()[n], b.transitions()[n]));
  }
  return TruncatedFIGModule(a.field(), a.group(), a.truncation(), std::move(reps),
                            std::move(trans));
}

TruncatedFIGModule truncate(const TruncatedFIGModule &v, int n) {
  if (n < 0 || n > v.truncation())
    throw std::out_of_range("truncate: degree outside the module's range");
  std::vector<GnRep> reps(v.reps().begin(), v.reps().begin() + n + 1);
  std::vector<Matrix> trans(v.transitions().begin(), v.transitions().begin() + n);
  return TruncatedFIGModule(v.field(), v.group(), n, std::move(reps), std::move(trans));
}

// ---------------------------------------------------------------------------

FreeModule::FreeModule(FieldSpec field, FiniteGroup group, std::vector<FreeBlock> blocks,
                       int truncation)
    : field_(field), group_(std::move(group)), blocks_(std::move(blocks)), n_(truncation) {
  if (truncation < 0)
    throw std::invalid_argument("truncation must be non-negative");
  for (const auto &b : blocks_) {
    if (b.rep.n != b.degree)
      throw std::invalid_argument("free block representation has the wrong arity");
    if (b.degree > truncation)
      throw std::domain_error("generator degree above truncation");
  }
  for (int n = 0; n <= n_; ++n) {
    std::vector<std::size_t> off;
    std::size_t total = 0;
    for (const auto &b : blocks_) {
      off.push_back(total);
      total += static_cast<std::size_t>(binomial(n, b.degree)) * b.rep.dim;
    }
    offsets_.push_back(std::move(off));
    dims_.push_back(total);
  }
  for (int n = 0; n <= n_; ++n) {
    GnRep rep;
    rep.n = n;
    rep.dim = dims_[n];
    for (auto s : group_generators(group_, n)) {
      std::vector<Matrix::Entry> entries;
      for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
        const auto &w = blocks_[bi].rep;
        int m = blocks_[bi].degree;
        if (m > n)
          continue;
        auto subs = subsets(n, m);
        for (std::size_t r = 0; r < subs.size(); ++r) {
          const auto &a = subs[r];
          std::size_t base = offsets_[n][bi] + r * w.dim;
          const Matrix *inner = nullptr;
          std::size_t target = base;
          if (s.kind == GenStep::Kind::swap) {
            int i = s.index;
            auto pi = std::find(a.begin(), a.end(), i);
            auto pj = std::find(a.begin(), a.end(), i + 1);
            bool hi = pi != a.end(), hj = pj != a.end();
            if (hi && hj) {
              inner = &w.swaps[pi - a.begin()];
            } else if (hi || hj) {
              auto b2 = a;
              for (auto &x : b2)
                x = x == i ? i + 1 : x == i + 1 ? i : x;
              target = offsets_[n][bi] + subset_rank(b2, n) * w.dim;
            }
          } else if (!a.empty() && a[0] == 0) {
            inner = &w.decs[s.index - 1];
          }
          for (std::size_t k = 0; k < w.dim; ++k) {
            if (inner) {
              for (auto &[c, val] : inner->row_entries(k))
                entries.push_back({base + k, base + c, val});
            } else {
              entries.push_back({base + k, target + k, mpq_class(1)});
            }
          }
        }
      }
      auto &slot = s.kind == GenStep::Kind::swap ? rep.swaps : rep.decs;
      slot.push_back(Matrix::from_entries(field_, dims_[n], dims_[n], std::move(entries)));
    }
    reps_.push_back(std::move(rep));
  }
  skips_.resize(n_ + 1);
  for (int n = 1; n <= n_; ++n)
    for (int j = 0; j < n; ++j) {
      std::vector<long> map(dims_[n - 1], -1);
      for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
        const auto &w = blocks_[bi].rep;
        int m = blocks_[bi].degree;
        if (m > n - 1)
          continue;
        auto subs = subsets(n - 1, m);
        for (std::size_t r = 0; r < subs.size(); ++r) {
          auto a = subs[r];
          for (auto &x : a)
            if (x >= j)
              ++x;
          std::size_t to = offsets_[n][bi] + subset_rank(a, n) * w.dim;
          std::size_t from = offsets_[n - 1][bi] + r * w.dim;
          for (std::size_t k = 0; k < w.dim; ++k)
            map[from + k] = static_cast<long>(to + k);
        }
      }
      skips_[n].push_back(Matrix::from_index_map(field_, dims_[n], map));
    }
}

const Matrix &FreeModule::gen(int n, const GenStep &s) const { return reps_.at(n).gen(s); }

std::size_t FreeModule::index(int n, std::size_t block, const std::vector<int> &subset,
                              std::size_t k) const {
  return offsets_.at(n).at(block) + subset_rank(subset, n) * blocks_.at(block).rep.dim + k;
}

Matrix FreeModule::element(std::size_t block, const FIGMorphism &phi,
                           const std::vector<mpq_class> &w) const {
  const auto &b = blocks_.at(block);
  if (phi.src != b.degree)
    throw std::invalid_argument("morphism source differs from the generator degree");
  if (w.size() != b.rep.dim)
    throw std::invalid_argument("coefficient length differs from the generator dimension");
  validate_morphism(group_, phi);
  if (phi.dst > n_)
    throw std::domain_error("truncation below relation degree");
  auto fac = factor_morphism(phi);
  auto u = act_rows(group_, b.rep, fac.aut, Matrix::from_rationals(field_, {w}));
  std::size_t base = index(phi.dst, block, fac.image, 0);
  std::vector<Matrix::Entry> entries;
  for (auto &[c, val] : u.row_entries(0))
    entries.push_back({0, base + c, val});
  return Matrix::from_entries(field_, 1, dims_[phi.dst], std::move(entries));
}

std::vector<std::size_t> FreeModule::generator_coords(int n) const {
  std::vector<std::size_t> out;
  for (std::size_t bi = 0; bi < blocks_.size(); ++bi)
    if (blocks_[bi].degree == n)
      for (std::size_t k = 0; k < blocks_[bi].rep.dim; ++k)
        out.push_back(offsets_.at(n)[bi] + k);
  return out;
}

std::vector<std::size_t> FreeModule::tail_coords(int n, int a) const {
  std::vector<std::size_t> out;
  int top = n + a;
  for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
    int m = blocks_[bi].degree;
    if (m > top || m < a)
      continue;
    std::size_t d = blocks_[bi].rep.dim;
    auto subs = subsets(top, m);
    for (std::size_t r = 0; r < subs.size(); ++r) {
      const auto &s = subs[r];
      // Sorted, so the tail {n..n+a-1} must be the last a entries.
      bool has = true;
      for (int t = 0; t < a; ++t)
        has = has && s[m - a + t] == n + t;
      if (has)
        for (std::size_t k = 0; k < d; ++k)
          out.push_back(offsets_.at(top)[bi] + r * d + k);
    }
  }
  return out;
}

TruncatedFIGModule FreeModule::to_module() const {
  std::vector<Matrix> trans;
  for (int n = 0; n < n_; ++n)
    trans.push_back(skips_[n + 1][n]);
  return TruncatedFIGModule(field_, group_, n_, reps_, std::move(trans));
}

TruncatedFIGModule build_free(const FBGModule &w, int truncation) {
  std::vector<FreeBlock> blocks;
  for (const auto &[deg, rep] : w.support) {
    if (deg > truncation)
      throw std::domain_error("build_free: W supported above the truncation");
    blocks.push_back({deg, rep});
  }
  return FreeModule(w.field, w.group, std::move(blocks), truncation).to_module();
}

std::vector<Matrix> free_images(const FIGAmbient &v, int m, const Matrix &w_rows) {
  int big_n = v.truncation();
  std::vector<Matrix> out(big_n + 1);
  for (int n = 0; n <= big_n && n < m; ++n)
    out[n] = Matrix(v.field(), 0, v.dim(n));
  if (m > big_n)
    return out;
  if (w_rows.cols() != v.dim(m))
    throw std::invalid_argument("free_images: rows do not live in degree m");
  std::size_t d = w_rows.rows();
  out[m] = w_rows;
  for (int n = m + 1; n <= big_n; ++n) {
    auto subs = subsets(n, m);
    // Each A misses some point; route it through the largest missing point j.
    std::vector<std::vector<std::size_t>> src(n), dst(n);
    for (std::size_t r = 0; r < subs.size(); ++r) {
      const auto &a = subs[r];
      int j = n - 1;
      while (std::binary_search(a.begin(), a.end(), j))
        --j;
      std::vector<int> below;
      for (int x : a)
        below.push_back(x > j ? x - 1 : x);
      std::size_t r0 = subset_rank(below, n - 1);
      for (std::size_t k = 0; k < d; ++k) {
        src[j].push_back(r0 * d + k);
        dst[j].push_back(r * d + k);
      }
    }
    std::vector<Matrix> parts;
    std::vector<std::size_t> order(subs.size() * d);
    std::size_t at = 0;
    for (int j = 0; j < n; ++j) {
      if (src[j].empty())
        continue;
      parts.push_back(out[n - 1].select_rows(src[j]) * v.skip(n, j));
      for (auto t : dst[j])
        order[t] = at++;
    }
    auto stacked = Matrix::vstack(parts, v.dim(n), v.field());
    out[n] = stacked.select_rows(order);
  }
  return out;
}

std::vector<std::string> validate_morphism(const FIGAmbient &src, const FIGAmbient &dst,
                                           const ModuleMorphism &phi) {
  std::vector<std::string> out;
  int big_n = std::min(src.truncation(), dst.truncation());
  if (phi.maps.size() < static_cast<std::size_t>(big_n) + 1) {
    out.push_back("morphism has too few degrees");
    return out;
  }
  for (int n = 0; n <= big_n; ++n) {
    const auto &m = phi.maps[n];
    if (m.rows() != src.dim(n) || m.cols() != dst.dim(n)) {
      out.push_back("morphism has wrong shape at degree " + std::to_string(n));
      return out;
    }
  }
  for (int n = 0; n <= big_n; ++n) {
    const auto &m = phi.maps[n];
    for (auto s : group_generators(src.group(), n))
      if (!(src.gen(n, s) * m == m * dst.gen(n, s)))
        out.push_back("morphism is not equivariant for " + gen_name(s) + " at degree " +
                      std::to_string(n));
    if (n < big_n && !(src.transition(n) * phi.maps[n + 1] == m * dst.transition(n)))
      out.push_back("morphism does not commute with X_" + std::to_string(n));
  }
  return out;
}

ModuleMorphism hom_from_free(const GnRep &w, const TruncatedFIGModule &v, const Matrix &phi_n) {
  int n = w.n;
  if (n > v.truncation())
    throw std::domain_error("hom_from_free: generator degree above truncation");
  if (!is_equivariant(w, v.rep(n), phi_n))
    throw std::invalid_argument("hom_from_free: map is not G_n-equivariant");
  ModuleMorphism out;
  out.maps = free_images(v, n, phi_n);
  return out;
}

Subquotient subquotient(const FIGAmbient &amb, const std::vector<Subspace> &z,
                        const std::vector<Subspace> &b, int truncation) {
  Subquotient out;
  for (int n = 0; n <= truncation; ++n)
    out.maps.push_back(quotient_map(z.at(n), b.at(n)));
  std::vector<GnRep> reps;
  std::vector<Matrix> trans;
  const auto &g = amb.group();
  for (int n = 0; n <= truncation; ++n) {
    const auto &q = out.maps[n];
    auto lift = q.lift();
    GnRep r;
    r.n = n;
    r.dim = q.dim;
    for (auto s : group_generators(g, n)) {
      auto &slot = s.kind == GenStep::Kind::swap ? r.swaps : r.decs;
      slot.push_back(q.dim ? q.project(lift * amb.gen(n, s)) : Matrix(amb.field(), 0, 0));
    }
    reps.push_back(std::move(r));
    if (n < truncation) {
      const auto &q1 = out.maps[n + 1];
      trans.push_back(q.dim && q1.dim ? q1.project(lift * amb.transition(n))
                                      : Matrix(amb.field(), q.dim, q1.dim));
    }
  }
  out.module = TruncatedFIGModule(amb.field(), g, truncation, std::move(reps), std::move(trans));
  return out;
}

FBGModule graded_subquotient(const FIGAmbient &amb, const std::vector<Subspace> &z,
                             const std::vector<Subspace> &b, int truncation) {
  FBGModule out;
  out.field = amb.field();
  out.group = amb.group();
  for (int n = 0; n <= truncation; ++n) {
    auto q = quotient_map(z.at(n), b.at(n));
    if (q.dim == 0)
      continue;
    auto lift = q.lift();
    GnRep r;
    r.n = n;
    r.dim = q.dim;
    for (auto s : group_generators(amb.group(), n)) {
      auto &slot = s.kind == GenStep::Kind::swap ? r.swaps : r.decs;
      slot.push_back(q.project(lift * amb.gen(n, s)));
    }
    out.support[n] = std::move(r);
  }
  return out;
}

ShiftedAmbient::ShiftedAmbient(const FIGAmbient &base, int b) : base_(base), b_(b) {
  if (b < 0 || b > base.truncation())
    throw std::out_of_range("shift amount outside the truncation");
}

CutAmbient::CutAmbient(const FIGAmbient &base, int top) : base_(base), top_(top) {
  if (top < 0 || top > base.truncation())
    throw std::out_of_range("cut degree outside the truncation");
}

// ---------------------------------------------------------------------------

int Presentation::generation_degree() const {
  int d = -1;
  for (const auto &g : generators)
    d = std::max(d, g.degree);
  return d;
}

int Presentation::relation_degree() const {
  int r = -1;
  for (const auto &rel : relations)
    r = std::max(r, rel.degree);
  return r;
}

void validate_presentation(const Presentation &p) {
  for (std::size_t j = 0; j < p.generators.size(); ++j) {
    const auto &g = p.generators[j];
    std::string where = "generator " + std::to_string(j);
    if (g.degree < 0 || g.rep.n != g.degree)
      throw std::invalid_argument(where + ": representation arity differs from its degree");
    auto msgs = validate_rep(p.group, g.rep);
    if (!msgs.empty())
      throw std::invalid_argument(where + ": " + msgs.front());
  }
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    const auto &rel = p.relations[i];
    std::string where = "relation " + std::to_string(i);
    for (const auto &t : rel.terms) {
      if (t.gen >= p.generators.size())
        throw std::invalid_argument(where + ": unknown generator " + std::to_string(t.gen));
      const auto &g = p.generators[t.gen];
      if (t.map.src != g.degree)
        throw std::invalid_argument(where + ": morphism source differs from generator degree");
      if (t.map.dst != rel.degree)
        throw std::invalid_argument(where + ": morphism target differs from relation degree");
      validate_morphism(p.group, t.map);
      if (t.coeff.size() != g.rep.dim)
        throw std::invalid_argument(where + ": coefficient length differs from generator dim");
    }
  }
}

Realization realize(const Presentation &p, int truncation) {
  validate_presentation(p);
  if (p.generation_degree() > truncation)
    throw std::domain_error("truncation below generator degree");
  if (p.relation_degree() > truncation)
    throw std::domain_error("truncation below relation degree");
  std::vector<FreeBlock> blocks;
  for (const auto &g : p.generators)
    blocks.push_back({g.degree, g.rep});
  Realization out;
  out.cover = FreeModule(p.field, p.group, std::move(blocks), truncation);
  const auto &f = out.cover;
  std::vector<Subspace> full;
  for (int n = 0; n <= truncation; ++n) {
    Subspace k = n == 0 ? Subspace(p.field, f.dim(0)) : lower_span(f, n, out.relations[n - 1]);
    std::vector<Matrix> rows;
    for (const auto &rel : p.relations) {
      if (rel.degree != n)
        continue;
      Matrix v(p.field, 1, f.dim(n));
      for (const auto &t : rel.terms)
        v = v + f.element(t.gen, t.map, t.coeff);
      rows.push_back(std::move(v));
    }
    if (!rows.empty())
      k = gn_closure(f, n, std::move(k), Matrix::vstack(rows, f.dim(n), p.field));
    out.relations.push_back(std::move(k));
    full.push_back(full_space(p.field, f.dim(n)));
  }
  auto sq = subquotient(f, full, out.relations, truncation);
  out.module = std::move(sq.module);
  for (int n = 0; n <= truncation; ++n)
    out.quotient.maps.push_back(sq.maps[n].project(Matrix::identity(p.field, f.dim(n))));
  return out;
}

} // namespace fig
