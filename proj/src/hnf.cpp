#include "fig/exactla.hpp"

#include <algorithm>
#include <stdexcept>

namespace fig {

HermiteForm hermite_normal_form(const IntMatrix &generators) {
  HermiteForm h;
  if (generators.empty())
    return h;
  std::size_t ncols = generators[0].size();
  IntMatrix a;
  for (const auto &g : generators) {
    if (g.size() != ncols)
      throw std::invalid_argument("hermite_normal_form: ragged input");
    if (std::any_of(g.begin(), g.end(), [](const mpz_class &x) { return x != 0; }))
      a.push_back(g);
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    // Euclid on column c among rows r.. until a single nonzero entry remains.
    while (true) {
      std::size_t best = a.size();
      for (std::size_t i = r; i < a.size(); ++i)
        if (a[i][c] != 0 && (best == a.size() || abs(a[i][c]) < abs(a[best][c])))
          best = i;
      if (best == a.size())
        break;
      std::swap(a[r], a[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < a.size(); ++i) {
        if (a[i][c] == 0)
          continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
        for (std::size_t j = c; j < ncols; ++j)
          a[i][j] -= q * a[r][j];
        if (a[i][c] != 0)
          done = false;
      }
      if (done)
        break;
    }
    if (a[r][c] == 0)
      continue;
    if (a[r][c] < 0)
      for (std::size_t j = c; j < ncols; ++j)
        a[r][j] = -a[r][j];
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
      if (q != 0)
        for (std::size_t j = c; j < ncols; ++j)
          a[i][j] -= q * a[r][j];
    }
    ++r;
  }
  a.resize(r);
  h.basis = std::move(a);
  h.rank = r;
  return h;
}

bool lattice_contains(const HermiteForm &h, const std::vector<mpz_class> &v) {
  std::vector<mpz_class> w = v;
  std::size_t c = 0;
  for (const auto &row : h.basis) {
    while (c < w.size() && row[c] == 0) {
      if (w[c] != 0)
        return false;
      ++c;
    }
    if (c == w.size())
      break;
    if (w[c] % row[c] != 0)
      return false;
    mpz_class q = w[c] / row[c];
    for (std::size_t j = c; j < w.size(); ++j)
      w[j] -= q * row[j];
    ++c;
  }
  return std::all_of(w.begin(), w.end(), [](const mpz_class &x) { return x == 0; });
}

} // namespace fig
