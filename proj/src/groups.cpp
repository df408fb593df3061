#include "fig/groups.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fig {

FiniteGroup::FiniteGroup() : mul_{{0}}, inv_{0}, name_("trivial") {}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>> &table) {
  int n = static_cast<int>(table.size());
  if (n == 0)
    throw std::invalid_argument("group table is empty");
  for (const auto &row : table) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("group table is not square");
    for (int v : row)
      if (v < 0 || v >= n)
        throw std::invalid_argument("group table entry out of range: " + std::to_string(v));
  }
  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = table[c][x] == x && table[x][c] == x;
    if (ok)
      e = c;
  }
  if (e < 0)
    throw std::invalid_argument("no identity element");
  for (int x = 0; x < n; ++x) {
    bool found = false;
    for (int y = 0; y < n && !found; ++y)
      found = table[x][y] == e && table[y][x] == e;
    if (!found)
      throw std::invalid_argument("no inverse for element " + std::to_string(x));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw std::invalid_argument("not associative at (" + std::to_string(a) + "," +
                                      std::to_string(b) + "," + std::to_string(c) + ")");
  // Relabel by swapping e and 0.
  std::vector<int> lab(n);
  std::iota(lab.begin(), lab.end(), 0);
  std::swap(lab[0], lab[e]);
  FiniteGroup g;
  g.mul_.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      g.mul_[lab[a]][lab[b]] = lab[table[a][b]];
  g.inv_.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mul_[a][b] == 0)
        g.inv_[a] = b;
  g.name_ = "table";
  return g;
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup(); }

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1)
    throw std::invalid_argument("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[a][b] = (a + b) % n;
  FiniteGroup g = from_table(t);
  g.name_ = n == 1 ? "trivial" : "Z" + std::to_string(n);
  return g;
}

FiniteGroup FiniteGroup::symmetric3() {
  // Elements as permutations of {0,1,2} in lexicographic order; the first is the identity.
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2};
  do
    perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int i = 0; i < 3; ++i)
        c[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  FiniteGroup g = from_table(t);
  g.name_ = "S3";
  return g;
}

FiniteGroup FiniteGroup::preset(const std::string &name) {
  if (name == "trivial" || name == "1" || name == "Z1")
    return trivial();
  if (name == "S3")
    return symmetric3();
  if (name.size() >= 2 && name[0] == 'Z' &&
      std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(c); })) {
    int n = std::stoi(name.substr(1));
    if (n >= 1 && n <= 12)
      return cyclic(n);
  }
  throw std::invalid_argument("unknown group preset '" + name + "'");
}

WreathElement WreathElement::identity(int n) {
  WreathElement x;
  x.perm.resize(n);
  std::iota(x.perm.begin(), x.perm.end(), 0);
  x.dec.assign(n, 0);
  return x;
}

WreathElement WreathElement::transposition(int n, int i) {
  if (i < 0 || i + 1 >= n)
    throw std::out_of_range("transposition index out of range");
  auto x = identity(n);
  std::swap(x.perm[i], x.perm[i + 1]);
  return x;
}

WreathElement WreathElement::decoration(int n, int i, int g) {
  if (i < 0 || i >= n)
    throw std::out_of_range("decoration position out of range");
  auto x = identity(n);
  x.dec[i] = g;
  return x;
}

void validate_wreath(const FiniteGroup &g, const WreathElement &x) {
  int n = x.n();
  if (static_cast<int>(x.dec.size()) != n)
    throw std::invalid_argument("wreath element: perm and dec lengths differ");
  std::vector<char> seen(n, 0);
  for (int v : x.perm) {
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument("wreath element: perm is not a bijection");
    seen[v] = 1;
  }
  for (int d : x.dec)
    if (d < 0 || d >= g.order())
      throw std::invalid_argument("wreath element: decoration out of range");
}

WreathElement wreath_compose(const FiniteGroup &g, const WreathElement &x, const WreathElement &y) {
  if (x.n() != y.n())
    throw std::invalid_argument("wreath_compose: arity mismatch");
  int n = x.n();
  WreathElement z;
  z.perm.resize(n);
  z.dec.resize(n);
  for (int i = 0; i < n; ++i) {
    z.perm[i] = x.perm[y.perm[i]];
    z.dec[i] = g.mul(y.dec[i], x.dec[y.perm[i]]);
  }
  return z;
}

WreathElement wreath_inverse(const FiniteGroup &g, const WreathElement &x) {
  int n = x.n();
  WreathElement z;
  z.perm.resize(n);
  z.dec.resize(n);
  // z o x = id: z.perm[x.perm[i]] = i and x.dec[i] * z.dec[x.perm[i]] = 1.
  for (int i = 0; i < n; ++i) {
    z.perm[x.perm[i]] = i;
    z.dec[x.perm[i]] = g.inv(x.dec[i]);
  }
  return z;
}

WreathElement wreath_embed(const WreathElement &x, int m) {
  if (m < x.n())
    throw std::invalid_argument("wreath_embed: target arity below source arity");
  WreathElement z = WreathElement::identity(m);
  for (int i = 0; i < x.n(); ++i) {
    z.perm[i] = x.perm[i];
    z.dec[i] = x.dec[i];
  }
  return z;
}

std::vector<WreathElement> enumerate_wreath(const FiniteGroup &g, int n) {
  std::vector<WreathElement> out;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    std::vector<int> d(n, 0);
    while (true) {
      out.push_back({p, d});
      int k = n - 1;
      while (k >= 0 && d[k] == g.order() - 1)
        d[k--] = 0;
      if (k < 0)
        break;
      ++d[k];
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace {

// (1 i) as a word in adjacent transpositions: s_0 s_1 ... s_{i-1} ... s_1 s_0.
void push_swap_to_first(std::vector<GenStep> &w, int i) {
  for (int k = 0; k < i; ++k)
    w.push_back({GenStep::Kind::swap, k});
  for (int k = i - 2; k >= 0; --k)
    w.push_back({GenStep::Kind::swap, k});
}

} // namespace

std::vector<GenStep> generator_word(const FiniteGroup &g, const WreathElement &x) {
  validate_wreath(g, x);
  // x = (sigma,1) o (id,dec); bubble sort gives sigma o s_{j1} o ... o s_{jk} = id.
  std::vector<int> a = x.perm;
  std::vector<int> swaps;
  int n = x.n();
  for (int pass = 0; pass < n; ++pass)
    for (int j = 0; j + 1 < n - pass; ++j)
      if (a[j] > a[j + 1]) {
        std::swap(a[j], a[j + 1]);
        swaps.push_back(j);
      }
  std::vector<GenStep> w;
  for (auto it = swaps.rbegin(); it != swaps.rend(); ++it)
    w.push_back({GenStep::Kind::swap, *it});
  for (int i = 0; i < n; ++i) {
    if (x.dec[i] == 0)
      continue;
    // delta_i(h) = (1 i) delta_1(h) (1 i)
    push_swap_to_first(w, i);
    w.push_back({GenStep::Kind::dec, x.dec[i]});
    push_swap_to_first(w, i);
  }
  return w;
}

} // namespace fig
