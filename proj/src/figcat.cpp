#include "fig/figcat.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fig {

FIGMorphism FIGMorphism::identity(int n) { return standard(n, n); }

FIGMorphism FIGMorphism::standard(int n, int m) {
  if (n > m)
    throw std::invalid_argument("standard inclusion needs n <= m");
  FIGMorphism f;
  f.src = n;
  f.dst = m;
  f.inj.resize(n);
  std::iota(f.inj.begin(), f.inj.end(), 0);
  f.dec.assign(n, 0);
  return f;
}

FIGMorphism FIGMorphism::from_subset(const std::vector<int> &subset, int m) {
  FIGMorphism f;
  f.src = static_cast<int>(subset.size());
  f.dst = m;
  f.inj = subset;
  f.dec.assign(subset.size(), 0);
  return f;
}

FIGMorphism FIGMorphism::from_wreath(const WreathElement &x) {
  return FIGMorphism{x.n(), x.n(), x.perm, x.dec};
}

void validate_morphism(const FiniteGroup &g, const FIGMorphism &f) {
  if (f.src < 0 || f.src > f.dst)
    throw std::invalid_argument("morphism arity: need 0 <= src <= dst");
  if (static_cast<int>(f.inj.size()) != f.src || static_cast<int>(f.dec.size()) != f.src)
    throw std::invalid_argument("morphism inj/dec length differs from source arity");
  std::vector<char> seen(f.dst, 0);
  for (int v : f.inj) {
    if (v < 0 || v >= f.dst || seen[v])
      throw std::invalid_argument("morphism injection has repeated or out-of-range values");
    seen[v] = 1;
  }
  for (int d : f.dec)
    if (d < 0 || d >= g.order())
      throw std::invalid_argument("morphism decoration out of range");
}

std::vector<FIGMorphism> enumerate_hom(int n, int m, const FiniteGroup &g) {
  std::vector<FIGMorphism> out;
  if (n < 0 || n > m)
    return out;
  std::vector<int> inj(n, 0);
  std::vector<char> used(m, 0);
  // Depth-first over injections in lexicographic order, then decorations.
  auto emit_decs = [&](const std::vector<int> &f) {
    std::vector<int> d(n, 0);
    while (true) {
      out.push_back({n, m, f, d});
      int k = n - 1;
      while (k >= 0 && d[k] == g.order() - 1)
        d[k--] = 0;
      if (k < 0)
        break;
      ++d[k];
    }
  };
  auto rec = [&](auto &&self, int pos) -> void {
    if (pos == n) {
      emit_decs(inj);
      return;
    }
    for (int v = 0; v < m; ++v) {
      if (used[v])
        continue;
      used[v] = 1;
      inj[pos] = v;
      self(self, pos + 1);
      used[v] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

FIGMorphism compose_morphisms(const FiniteGroup &g, const FIGMorphism &outer,
                              const FIGMorphism &inner) {
  if (inner.dst != outer.src)
    throw std::invalid_argument("compose_morphisms: arity mismatch");
  FIGMorphism h;
  h.src = inner.src;
  h.dst = outer.dst;
  h.inj.resize(inner.src);
  h.dec.resize(inner.src);
  for (int x = 0; x < inner.src; ++x) {
    h.inj[x] = outer.inj[inner.inj[x]];
    h.dec[x] = g.mul(inner.dec[x], outer.dec[inner.inj[x]]);
  }
  return h;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n)
    return out;
  std::vector<int> s(k);
  std::iota(s.begin(), s.end(), 0);
  while (true) {
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i)
      --i;
    if (i < 0)
      break;
    ++s[i];
    for (int j = i + 1; j < k; ++j)
      s[j] = s[j - 1] + 1;
  }
  return out;
}

long binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n)
    return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

std::size_t subset_rank(const std::vector<int> &s, int n) {
  // Lexicographic rank: count subsets that are smaller at the first differing position.
  std::size_t rank = 0;
  int k = static_cast<int>(s.size());
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    for (int v = prev + 1; v < s[i]; ++v)
      rank += binomial(n - v - 1, k - i - 1);
    prev = s[i];
  }
  return rank;
}

std::vector<FIGMorphism> orbit_representatives(int n, int m, const FiniteGroup &) {
  std::vector<FIGMorphism> out;
  for (const auto &s : subsets(m, n))
    out.push_back(FIGMorphism::from_subset(s, m));
  return out;
}

Factorization factor_morphism(const FIGMorphism &f) {
  Factorization fac;
  fac.image = f.inj;
  std::sort(fac.image.begin(), fac.image.end());
  fac.aut.perm.resize(f.src);
  for (int i = 0; i < f.src; ++i)
    fac.aut.perm[i] = static_cast<int>(
        std::lower_bound(fac.image.begin(), fac.image.end(), f.inj[i]) - fac.image.begin());
  fac.aut.dec = f.dec;
  return fac;
}

// ---------------------------------------------------------------------------

bool in_sigma(const std::vector<int> &s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] > static_cast<int>(2 * i + 1))
      return false;
  return true;
}

SigmaSet sigma(int b) {
  if (b < 0)
    throw std::invalid_argument("sigma: b must be non-negative");
  SigmaSet out;
  out.b = b;
  for (auto s : subsets(2 * b, b)) {
    for (auto &v : s)
      ++v;
    if (in_sigma(s))
      out.subsets.push_back(s);
  }
  return out;
}

SigmaSet sigma_ab(int a, int b) {
  if (a < 1 || a > b)
    throw std::invalid_argument("sigma_ab: need 1 <= a <= b");
  SigmaSet all = sigma(b), out;
  out.b = b;
  for (const auto &s : all.subsets)
    if (std::all_of(s.begin(), s.begin() + a, [&, i = 0](int v) mutable { return v == ++i; }))
      out.subsets.push_back(s);
  return out;
}

GroupAlgebraElement GroupAlgebraElement::unit(int n) {
  GroupAlgebraElement e;
  e.n = n;
  e.terms[WreathElement::identity(n)] = 1;
  return e;
}

GroupAlgebraElement GroupAlgebraElement::j_element(int n, int i, int j) {
  if (i == j || i < 1 || j < 1 || i > n || j > n)
    throw std::invalid_argument("J element needs distinct indices in [n]");
  GroupAlgebraElement e = unit(n);
  auto t = WreathElement::identity(n);
  std::swap(t.perm[i - 1], t.perm[j - 1]);
  e.terms[t] = -1;
  return e;
}

GroupAlgebraElement GroupAlgebraElement::multiply(const FiniteGroup &g,
                                                  const GroupAlgebraElement &rhs) const {
  if (n != rhs.n)
    throw std::invalid_argument("group algebra arity mismatch");
  GroupAlgebraElement out;
  out.n = n;
  for (const auto &[x, a] : terms)
    for (const auto &[y, b] : rhs.terms) {
      auto z = wreath_compose(g, x, y);
      long &c = out.terms[z];
      c += a * b;
      if (c == 0)
        out.terms.erase(z);
    }
  return out;
}

GroupAlgebraElement j_product(const std::vector<int> &s, int n, const FiniteGroup &g) {
  int b = static_cast<int>(s.size());
  if (n < 2 * b)
    throw std::invalid_argument("j_product: need n >= 2b");
  std::vector<int> ss = s;
  std::sort(ss.begin(), ss.end());
  if (std::adjacent_find(ss.begin(), ss.end()) != ss.end() ||
      (b > 0 && (ss.front() < 1 || ss.back() > 2 * b)))
    throw std::invalid_argument("j_product: S must be a b-subset of [2b]");
  std::vector<int> t;
  for (int v = 1; v <= 2 * b; ++v)
    if (!std::binary_search(ss.begin(), ss.end(), v))
      t.push_back(v);
  auto out = GroupAlgebraElement::unit(n);
  for (int p = 0; p < b; ++p)
    out = out.multiply(g, GroupAlgebraElement::j_element(n, ss[p], t[p]));
  return out;
}

bool verify_lex_first(const std::vector<int> &s, const std::vector<int> &u,
                      const std::vector<int> &idx, int n) {
  std::vector<int> ss = s, uu = u, ii = idx;
  std::sort(ss.begin(), ss.end());
  std::sort(uu.begin(), uu.end());
  std::sort(ii.begin(), ii.end());
  int b = static_cast<int>(ss.size());
  if (static_cast<int>(ii.size()) != b)
    throw std::invalid_argument("verify_lex_first: |idx| must equal |S|");
  for (int v : ss)
    if (!std::binary_search(uu.begin(), uu.end(), v))
      throw std::invalid_argument("verify_lex_first: S must be contained in U");
  for (int v : ii)
    if (v < 1 || v > n || std::binary_search(uu.begin(), uu.end(), v))
      throw std::invalid_argument("verify_lex_first: idx must lie in [n] - U");
  if (std::adjacent_find(ii.begin(), ii.end()) != ii.end())
    throw std::invalid_argument("verify_lex_first: idx entries must be distinct");
  for (int v : uu)
    if (v < 1 || v > n)
      throw std::invalid_argument("verify_lex_first: U must lie in [n]");
  if (static_cast<int>(ss.size()) > 0 && ss.back() > 2 * b)
    throw std::invalid_argument("verify_lex_first: S must lie in [2b]");
  if (!in_sigma(ss))
    return true;
  for (unsigned mask = 1; mask < (1u << b); ++mask) {
    std::vector<int> img = uu;
    for (int p = 0; p < b; ++p)
      if (mask & (1u << p))
        std::replace(img.begin(), img.end(), ss[p], ii[p]);
    std::sort(img.begin(), img.end());
    if (img < uu)
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

// All sets of m pairwise disjoint unordered pairs in {1..n}, each as a list of
// (i, j) with i < j, pairs ordered by first element.
void disjoint_pairs(int n, int m, std::vector<std::vector<std::pair<int, int>>> &out) {
  std::vector<std::pair<int, int>> cur;
  std::vector<char> used(n + 1, 0);
  auto rec = [&](auto &&self, int start) -> void {
    if (static_cast<int>(cur.size()) == m) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n; ++i) {
      if (used[i])
        continue;
      used[i] = 1;
      for (int j = i + 1; j <= n; ++j) {
        if (used[j])
          continue;
        used[j] = 1;
        cur.emplace_back(i, j);
        self(self, i + 1);
        cur.pop_back();
        used[j] = 0;
      }
      used[i] = 0;
    }
  };
  rec(rec, 1);
}

std::vector<mpz_class> apply_element(const FiniteGroup &g, const GroupAlgebraElement &x,
                                     const FIGMorphism &phi,
                                     const std::map<FIGMorphism, std::size_t> &index) {
  std::vector<mpz_class> v(index.size(), 0);
  for (const auto &[w, c] : x.terms)
    v[index.at(compose_morphisms(g, FIGMorphism::from_wreath(w), phi))] += c;
  return v;
}

bool is_zero_vec(const std::vector<mpz_class> &v) {
  return std::all_of(v.begin(), v.end(), [](const mpz_class &x) { return x == 0; });
}

GroupAlgebraElement pair_product(const FiniteGroup &g, int n,
                                 const std::vector<std::pair<int, int>> &pairs) {
  auto out = GroupAlgebraElement::unit(n);
  for (auto [i, j] : pairs)
    out = out.multiply(g, GroupAlgebraElement::j_element(n, i, j));
  return out;
}

} // namespace

SpanIdentityReport verify_span_identity(int r, int n, int b, const FiniteGroup &g) {
  if (n < b + r)
    throw std::invalid_argument("verify_span_identity: requires n >= b + r");
  SpanIdentityReport rep;
  auto hom = enumerate_hom(r, n, g);
  std::map<FIGMorphism, std::size_t> index;
  for (std::size_t k = 0; k < hom.size(); ++k)
    index[hom[k]] = k;
  rep.ambient_rank = hom.size();

  // Left action of the generators of G_n on Z[Hom], as permutations with no signs.
  std::vector<WreathElement> gens;
  for (int i = 0; i + 1 < n; ++i)
    gens.push_back(WreathElement::transposition(n, i));
  if (n > 0)
    for (int h = 1; h < g.order(); ++h)
      gens.push_back(WreathElement::decoration(n, 0, h));
  std::vector<std::vector<std::size_t>> perm(gens.size(), std::vector<std::size_t>(hom.size()));
  for (std::size_t t = 0; t < gens.size(); ++t)
    for (std::size_t k = 0; k < hom.size(); ++k)
      perm[t][k] = index.at(compose_morphisms(g, FIGMorphism::from_wreath(gens[t]), hom[k]));

  // I_b F: products of b disjoint J's applied to basis vectors, then closed under G_n.
  IntMatrix gensI;
  std::vector<std::vector<std::pair<int, int>>> pairsets;
  if (2 * b <= n)
    disjoint_pairs(n, b, pairsets);
  for (const auto &ps : pairsets) {
    auto j = pair_product(g, n, ps);
    for (const auto &phi : hom) {
      auto v = apply_element(g, j, phi, index);
      if (!is_zero_vec(v))
        gensI.push_back(std::move(v));
    }
  }
  HermiteForm lat = hermite_normal_form(gensI);
  while (true) {
    IntMatrix grown = lat.basis;
    for (const auto &row : lat.basis)
      for (std::size_t t = 0; t < gens.size(); ++t) {
        std::vector<mpz_class> w(hom.size(), 0);
        for (std::size_t k = 0; k < hom.size(); ++k)
          w[perm[t][k]] = row[k];
        if (!lattice_contains(lat, w))
          grown.push_back(std::move(w));
      }
    if (grown.size() == lat.basis.size())
      break;
    lat = hermite_normal_form(grown);
  }
  IntMatrix total = lat.basis;
  auto sig = sigma(b);
  for (std::size_t k = 0; k < hom.size(); ++k) {
    bool in_fb = true;
    for (const auto &s : sig.subsets) {
      bool contained = std::all_of(s.begin(), s.end(), [&](int v) {
        return std::find(hom[k].inj.begin(), hom[k].inj.end(), v - 1) != hom[k].inj.end();
      });
      if (contained) {
        in_fb = false;
        break;
      }
    }
    if (in_fb) {
      std::vector<mpz_class> e(hom.size(), 0);
      e[k] = 1;
      total.push_back(std::move(e));
    }
  }
  auto h = hermite_normal_form(total);
  rep.lattice_rank = h.rank;
  rep.span_identity = h.rank == hom.size();
  for (std::size_t k = 0; k < h.basis.size() && rep.span_identity; ++k)
    rep.span_identity = h.basis[k][k] == 1;

  // I_{r+1} annihilates F: every product of r+1 disjoint J's kills every basis vector.
  rep.annihilation = true;
  std::vector<std::vector<std::pair<int, int>>> bigger;
  if (2 * (r + 1) <= n)
    disjoint_pairs(n, r + 1, bigger);
  for (const auto &ps : bigger) {
    auto j = pair_product(g, n, ps);
    for (const auto &phi : hom)
      if (!is_zero_vec(apply_element(g, j, phi, index)))
        rep.annihilation = false;
  }

  // J products vanish on (f,g) whenever some pair avoids im f.
  rep.vanishing = true;
  for (int m = 1; 2 * m <= n && m <= std::max(b, 1); ++m) {
    std::vector<std::vector<std::pair<int, int>>> sets;
    disjoint_pairs(n, m, sets);
    for (const auto &ps : sets) {
      auto j = pair_product(g, n, ps);
      for (const auto &phi : hom) {
        bool misses = false;
        for (auto [i, jj] : ps) {
          bool hit = std::find(phi.inj.begin(), phi.inj.end(), i - 1) != phi.inj.end() ||
                     std::find(phi.inj.begin(), phi.inj.end(), jj - 1) != phi.inj.end();
          misses = misses || !hit;
        }
        if (misses && !is_zero_vec(apply_element(g, j, phi, index)))
          rep.vanishing = false;
      }
    }
  }
  return rep;
}

} // namespace fig
