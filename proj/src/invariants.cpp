#include "fig/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace fig {

std::string ExtInt::str() const {
  switch (kind) {
  case Kind::neg_inf:
    return "-inf";
  case Kind::pos_inf:
    return "inf";
  default:
    return std::to_string(value);
  }
}

ExtInt ExtInt::plus(long k) const { return finite() ? of(value + k) : *this; }

std::strong_ordering operator<=>(const ExtInt &a, const ExtInt &b) {
  if (a.kind != b.kind)
    return static_cast<int>(a.kind) <=> static_cast<int>(b.kind);
  return a.finite() ? a.value <=> b.value : std::strong_ordering::equal;
}

ExtInt max(ExtInt a, ExtInt b) { return a < b ? b : a; }
ExtInt min(ExtInt a, ExtInt b) { return a < b ? a : b; }

ExtInt degree_of(const std::vector<std::size_t> &dims) {
  for (std::size_t n = dims.size(); n-- > 0;)
    if (dims[n])
      return ExtInt::of(static_cast<long>(n));
  return ExtInt::neg_inf();
}

const std::vector<Invariant> &all_invariants() {
  static const std::vector<Invariant> all = {
      Invariant::degrees,    Invariant::torsion, Invariant::depth,   Invariant::derived_regularity,
      Invariant::regularity, Invariant::nagpal,  Invariant::hilbert, Invariant::filtration};
  return all;
}

std::string invariant_name(Invariant inv) {
  switch (inv) {
  case Invariant::degrees:
    return "degrees";
  case Invariant::torsion:
    return "torsion";
  case Invariant::depth:
    return "depth";
  case Invariant::derived_regularity:
    return "dreg";
  case Invariant::regularity:
    return "reg";
  case Invariant::nagpal:
    return "nagpal";
  case Invariant::hilbert:
    return "hilbert";
  case Invariant::filtration:
    return "filtration";
  }
  return "?";
}

std::optional<Invariant> parse_invariant(const std::string &name) {
  for (auto inv : all_invariants())
    if (invariant_name(inv) == name)
      return inv;
  if (name == "dwidth")
    return Invariant::derived_regularity;
  return std::nullopt;
}

int stable_start(int d, int r) {
  int rr = std::max(r, 0), dd = std::max(d, 0);
  return rr + std::min(rr, dd);
}

int homology_window(int i, int d, int r) {
  if (i == 0)
    return std::max(d, 0);
  if (r < 0 || d < 0)
    return 0;
  if (i == 1)
    return r;
  return std::max(r, stable_start(d, r) - 1 + i);
}

int required_truncation(Invariant inv, int d, int r, int i_max) {
  int rr = std::max(r, 0), dd = std::max(d, 0);
  int s = stable_start(d, r);
  switch (inv) {
  case Invariant::degrees: {
    int n = 0;
    for (int i = 0; i <= i_max; ++i)
      n = std::max(n, homology_window(i, d, r));
    return n;
  }
  case Invariant::torsion:
    return s;
  case Invariant::depth:
    return d < 0 ? 0 : std::max({s, dd + 1, rr});
  case Invariant::derived_regularity:
    return std::max(s, std::max(rr, dd));
  case Invariant::regularity: {
    int n = 0;
    for (int i = 1; i <= i_max; ++i)
      n = std::max(n, homology_window(i, d, r));
    return n;
  }
  case Invariant::nagpal:
    return std::max(s + rr, std::max(s, std::max(rr, dd)));
  case Invariant::hilbert:
    return d < 0 ? 0 : s + dd + 1;
  case Invariant::filtration:
    return rr;
  }
  return 0;
}

mpq_class evaluate(const std::vector<mpq_class> &poly, long x) {
  mpq_class acc = 0;
  for (std::size_t k = poly.size(); k-- > 0;)
    acc = acc * x + poly[k];
  return acc;
}

std::vector<mpq_class> interpolate(const std::vector<long> &xs, const std::vector<mpq_class> &ys) {
  std::size_t m = xs.size();
  std::vector<mpq_class> out(m, mpq_class(0));
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<mpq_class> basis{mpq_class(1)};
    mpq_class denom = 1;
    for (std::size_t k = 0; k < m; ++k) {
      if (k == j)
        continue;
      std::vector<mpq_class> next(basis.size() + 1, mpq_class(0));
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] += basis[t];
        next[t] -= basis[t] * xs[k];
      }
      basis = std::move(next);
      denom *= xs[j] - xs[k];
    }
    for (std::size_t t = 0; t < basis.size(); ++t)
      out[t] += ys[j] * basis[t] / denom;
  }
  while (!out.empty() && out.back() == 0)
    out.pop_back();
  return out;
}

std::string polynomial_string(const std::vector<mpq_class> &poly, const std::string &var) {
  std::string out;
  for (std::size_t k = poly.size(); k-- > 0;) {
    mpq_class c = poly[k];
    if (c == 0)
      continue;
    bool neg = c < 0;
    if (neg)
      c = -c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (k == 0 || c != 1)
      out += c.get_str();
    if (k > 0 && c != 1)
      out += "*";
    out += mono;
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------

Analysis::Analysis(const Presentation &p, int truncation)
    : real_(realize(p, truncation)), d_(p.generation_degree()), r_(p.relation_degree()),
      declared_(true) {
  res_ = std::make_shared<Resolution>(real_->module);
}

Analysis::Analysis(TruncatedFIGModule v) : res_(std::make_shared<Resolution>(std::move(v))) {
  auto h0 = degree_of(homology_dims(0));
  d_ = h0.finite() ? static_cast<int>(h0.value) : -1;
  auto h1 = degree_of(homology_dims(1));
  r_ = h1.finite() ? static_cast<int>(h1.value) : -1;
}

Analysis::Analysis(TruncatedFIGModule v, int d, int r)
    : res_(std::make_shared<Resolution>(std::move(v))), d_(d), r_(r), declared_(true) {}

bool Analysis::certifies(Invariant inv, int i_max) const {
  return truncation() >= required_truncation(inv, d_, r_, i_max);
}

Certified<ExtInt> Analysis::module_degree() const {
  auto d = dims();
  return {degree_of(d), d.back() == 0 && d_ <= truncation()};
}

const std::vector<std::size_t> &Analysis::homology_dims(int i) const {
  auto it = hdims_.find(i);
  if (it == hdims_.end())
    it = hdims_.emplace(i, res_->homology_dims(i)).first;
  return it->second;
}

Certified<ExtInt> Analysis::hd(int i) const {
  return {degree_of(homology_dims(i)), truncation() >= homology_window(i, d_, r_)};
}

const std::vector<std::size_t> &Analysis::derived_dims(int i, int a) const {
  auto key = std::make_pair(i, a);
  auto it = ddims_.find(key);
  if (it == ddims_.end())
    it = ddims_.emplace(key, res_->derived_derivative(i, a).dims()).first;
  return it->second;
}

TorsionInfo Analysis::torsion() const {
  TorsionInfo out;
  out.dims = torsion_submodule(module()).dims();
  out.torsion_free = std::all_of(out.dims.begin(), out.dims.end(), [](auto x) { return x == 0; });
  out.certified = certifies(Invariant::torsion);
  return out;
}

Certified<ExtInt> Analysis::depth() const {
  bool cert = certifies(Invariant::depth);
  if (!hd(1).value.finite())
    return {ExtInt::pos_inf(), cert};
  int top = std::min(std::max(d_, 0), truncation() - 1);
  for (int a = 0; a <= top; ++a) {
    const auto &h = derived_dims(1, a + 1);
    if (degree_of(h).finite())
      return {ExtInt::of(a), cert};
  }
  if (cert)
    throw std::logic_error("depth: H_1^{D^a} vanishes for all a up to the generating degree + 1");
  return {ExtInt::of(top + 1), false};
}

DerivedRegularity Analysis::derived_regularity() const {
  if (dreg_)
    return *dreg_;
  DerivedRegularity out;
  auto h1 = hd(1).value;
  int want = std::max(h1.finite() ? static_cast<int>(h1.value) : 0, std::max(d_, 0));
  if (d_ < 0)
    want = 0;
  out.a_max = std::min(want, truncation());
  out.dreg = out.dwidth = ExtInt::neg_inf();
  for (int a = 1; a <= out.a_max; ++a) {
    auto deg = degree_of(derived_dims(1, a));
    out.degrees.push_back(deg);
    out.dreg = max(out.dreg, deg);
    out.dwidth = max(out.dwidth, deg.plus(a));
  }
  out.certified = want <= truncation() && certifies(Invariant::derived_regularity);
  dreg_ = out;
  return out;
}

Certified<ExtInt> Analysis::regularity(int i_max) const {
  Certified<ExtInt> out{ExtInt::neg_inf(), true};
  for (int i = 1; i <= i_max; ++i) {
    auto h = hd(i);
    out.value = max(out.value, h.value.plus(-i));
    out.certified = out.certified && h.certified;
  }
  return out;
}

ExtInt Analysis::regularity_bound() const {
  if (r_ < 0 || d_ < 0)
    return ExtInt::neg_inf();
  return ExtInt::of(r_ + std::min(r_, d_) - 1);
}

ExtInt Analysis::regularity_bound_homological() const {
  auto h1 = hd(1).value, h0 = hd(0).value;
  if (!h1.finite() || !h0.finite())
    return ExtInt::neg_inf();
  return ExtInt::of(h1.value + std::min(h1.value, h0.value) - 1);
}

NagpalInfo Analysis::nagpal() const {
  NagpalInfo out;
  bool sharp = !hd(1).value.finite();
  auto dr = derived_regularity();
  out.from_dreg = sharp ? ExtInt::of(0) : dr.dreg.plus(1);
  int limit = truncation() - std::max(r_, 0);
  for (int b = 0; b <= limit; ++b) {
    bool vanishes;
    if (b == 0) {
      vanishes = sharp;
    } else {
      Resolution shifted(shift(module(), b));
      auto h = shifted.homology_dims(1);
      vanishes = !degree_of(h).finite();
    }
    if (vanishes) {
      out.direct = ExtInt::of(b);
      out.certified = hd(1).certified && (sharp || dr.certified);
      return out;
    }
  }
  out.direct = ExtInt::of(limit + 1);
  out.certified = false;
  return out;
}

Filtration Analysis::sharp_filtration() const {
  Filtration out;
  out.h1_vanishes = !hd(1).value.finite();
  out.certified = hd(1).certified;
  TruncatedFIGModule q = module();
  int big_n = truncation();
  for (int step = 0;; ++step) {
    int i = 0;
    while (i <= big_n && q.dim(i) == 0)
      ++i;
    if (i > big_n) {
      out.constructed = true;
      break;
    }
    const auto &w = q.rep(i);
    auto phi = hom_from_free(w, q, Matrix::identity(q.field(), w.dim));
    for (int n = i; n <= big_n && out.failed_degree < 0; ++n)
      if (left_kernel(phi.maps[n]).rows() != 0)
        out.failed_degree = n;
    out.cofactors.push_back({i, w.dim});
    if (out.failed_degree >= 0) {
      out.failed_step = step;
      break;
    }
    q = cokernel(q, phi);
  }
  std::vector<FiltrationStep> h0;
  const auto &h = homology_dims(0);
  for (int n = 0; n <= big_n; ++n)
    if (h[n])
      h0.push_back({n, h[n]});
  out.matches_h0 = out.constructed && h0.size() == out.cofactors.size() &&
                   std::equal(h0.begin(), h0.end(), out.cofactors.begin(), [](auto &a, auto &b) {
                     return a.degree == b.degree && a.dim == b.dim;
                   });
  return out;
}

HilbertInfo Analysis::hilbert() const {
  HilbertInfo out;
  out.values = dims();
  out.start = stable_start();
  auto h1 = hd(1).value, h0 = hd(0).value;
  out.homological_start =
      h1.finite() && h0.finite() ? fig::stable_start(static_cast<int>(h0.value), static_cast<int>(h1.value)) : 0;
  out.required = required_truncation(Invariant::hilbert, d_, r_);
  out.certified = truncation() >= out.required;
  int big_n = truncation();
  if (d_ < 0) {
    out.polynomial = std::vector<mpq_class>{};
  } else if (out.start + d_ <= big_n) {
    std::vector<long> xs;
    std::vector<mpq_class> ys;
    for (int k = 0; k <= d_; ++k) {
      xs.push_back(out.start + k);
      ys.push_back(mpq_class(static_cast<unsigned long>(out.values[out.start + k])));
    }
    out.polynomial = interpolate(xs, ys);
  } else {
    out.certified = false;
    return out;
  }
  auto agrees = [&](int n) {
    return evaluate(*out.polynomial, n) == mpq_class(static_cast<unsigned long>(out.values[n]));
  };
  for (int n = out.start; n <= big_n; ++n)
    if (!agrees(n))
      out.disagreements.push_back(n);
  int m = big_n + 1;
  while (m > 0 && agrees(m - 1))
    --m;
  if (m <= big_n)
    out.earliest_agreement = m;
  return out;
}

} // namespace fig
