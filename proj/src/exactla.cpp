#include "fig/exactla.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fig {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

} // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31))
    throw std::invalid_argument("field characteristic must be a prime below 2^31, got " +
                                std::to_string(p));
  return FieldSpec(Kind::prime, p);
}

FieldSpec FieldSpec::parse(const std::string &text) {
  if (text == "Q" || text == "q" || text == "QQ")
    return rationals();
  std::string digits;
  if (text.rfind("Fp:", 0) == 0)
    digits = text.substr(3);
  else if (text.rfind("F", 0) == 0)
    digits = text.substr(1);
  else
    throw std::invalid_argument("unknown field '" + text + "'");
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
    throw std::invalid_argument("unknown field '" + text + "'");
  return prime(static_cast<std::uint32_t>(std::stoul(digits)));
}

std::string FieldSpec::name() const {
  return is_rational() ? "Q" : "Fp:" + std::to_string(p_);
}

namespace detail {

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0)
    throw std::domain_error("division by zero in prime field");
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1)
      result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<Elem>(result);
}

PrimeField::Elem PrimeField::from_int(long v) const {
  long r = v % static_cast<long>(p);
  if (r < 0)
    r += p;
  return static_cast<Elem>(r);
}

PrimeField::Elem PrimeField::from_rational(const mpq_class &q) const {
  mpz_class num = q.get_num() % p;
  if (num < 0)
    num += p;
  mpz_class den = q.get_den() % p;
  if (den == 0)
    throw std::domain_error("rational with denominator divisible by p");
  return mul(static_cast<Elem>(num.get_ui()), inv(static_cast<Elem>(den.get_ui())));
}

void RationalField::sub_mul(Elem &acc, const Elem &a, const Elem &b) const {
  mpq_class t;
  mpq_mul(t.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
  mpq_sub(acc.get_mpq_t(), acc.get_mpq_t(), t.get_mpq_t());
}

void RationalField::add_mul(Elem &acc, const Elem &a, const Elem &b) const {
  mpq_class t;
  mpq_mul(t.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
  mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), t.get_mpq_t());
}

namespace {

// Dense scratch vector that remembers which coordinates it touched, so that
// clearing and extracting cost O(support) rather than O(ambient).
template <class F> class Accumulator {
public:
  using E = typename F::Elem;

  Accumulator(const F &f, std::size_t n) : f_(f), v_(n, f.zero()), mark_(n, 0) {}

  void load(const SparseRow<F> &r) {
    for (std::size_t k = 0; k < r.size(); ++k) {
      touch(r.idx[k]);
      v_[r.idx[k]] = r.val[k];
    }
  }
  void add_scaled(const E &c, const SparseRow<F> &r) {
    for (std::size_t k = 0; k < r.size(); ++k) {
      touch(r.idx[k]);
      f_.add_mul(v_[r.idx[k]], c, r.val[k]);
    }
  }
  void sub_scaled(const E &c, const SparseRow<F> &r) {
    for (std::size_t k = 0; k < r.size(); ++k) {
      touch(r.idx[k]);
      f_.sub_mul(v_[r.idx[k]], c, r.val[k]);
    }
  }
  bool nonzero_at(std::uint32_t i) const { return mark_[i] && !f_.is_zero(v_[i]); }
  const E &at(std::uint32_t i) const { return v_[i]; }

  // Smallest touched index holding a nonzero value, or -1.
  long first_nonzero() const {
    long best = -1;
    for (auto i : touched_)
      if (!f_.is_zero(v_[i]) && (best < 0 || i < best))
        best = i;
    return best;
  }
  long first_nonzero_below(std::uint32_t limit) const {
    long best = -1;
    for (auto i : touched_)
      if (i < limit && !f_.is_zero(v_[i]) && (best < 0 || i < best))
        best = i;
    return best;
  }

  // Returns the nonzero entries sorted by index, scaled by `scale`, and clears.
  SparseRow<F> extract(const E &scale) {
    std::sort(touched_.begin(), touched_.end());
    SparseRow<F> r;
    bool unit = f_.is_one(scale);
    for (auto i : touched_) {
      if (!f_.is_zero(v_[i])) {
        r.idx.push_back(i);
        r.val.push_back(unit ? v_[i] : f_.mul(v_[i], scale));
      }
      v_[i] = f_.zero();
      mark_[i] = 0;
    }
    touched_.clear();
    return r;
  }
  SparseRow<F> extract() { return extract(f_.one()); }
  void clear() {
    for (auto i : touched_) {
      v_[i] = f_.zero();
      mark_[i] = 0;
    }
    touched_.clear();
  }

private:
  void touch(std::uint32_t i) {
    if (!mark_[i]) {
      mark_[i] = 1;
      touched_.push_back(i);
    }
  }
  F f_;
  std::vector<E> v_;
  std::vector<char> mark_;
  std::vector<std::uint32_t> touched_;
};

template <class F> SparseMat<F> empty_mat(const F &f, std::size_t r, std::size_t c) {
  SparseMat<F> m{f, r, c, {}};
  m.rows.resize(r);
  return m;
}

MatImpl make_impl(const FieldSpec &fs, std::size_t r, std::size_t c) {
  if (fs.is_rational())
    return empty_mat(RationalField{}, r, c);
  return empty_mat(PrimeField{fs.characteristic()}, r, c);
}

EchelonImpl make_echelon(const FieldSpec &fs, std::size_t n) {
  if (fs.is_rational())
    return Echelon<RationalField>{RationalField{}, n, {}, {}};
  return Echelon<PrimeField>{PrimeField{fs.characteristic()}, n, {}, {}};
}

// Reduces the accumulator modulo the echelon rows; optionally records the
// multiples subtracted (coefficient k is the coordinate along rows[k]).
template <class F>
void reduce_acc(Accumulator<F> &acc, const Echelon<F> &e, std::vector<typename F::Elem> *coeff) {
  for (std::size_t k = 0; k < e.rows.size(); ++k) {
    auto p = e.piv[k];
    if (acc.nonzero_at(p)) {
      typename F::Elem c = acc.at(p);
      acc.sub_scaled(c, e.rows[k]);
      if (coeff)
        (*coeff)[k] = c;
    }
  }
}

// Inserts the row currently held by acc; returns true if it enlarged the span.
template <class F> bool insert_acc(Accumulator<F> &acc, Echelon<F> &e) {
  reduce_acc(acc, e, nullptr);
  long p = acc.first_nonzero();
  if (p < 0) {
    acc.clear();
    return false;
  }
  auto scale = e.field.inv(acc.at(static_cast<std::uint32_t>(p)));
  e.rows.push_back(acc.extract(scale));
  e.piv.push_back(static_cast<std::uint32_t>(p));
  return true;
}

template <class F> SparseMat<F> multiply(const SparseMat<F> &a, const SparseMat<F> &b) {
  if (a.ncols != b.nrows)
    throw std::invalid_argument("matrix product dimension mismatch: " + std::to_string(a.nrows) +
                                "x" + std::to_string(a.ncols) + " * " + std::to_string(b.nrows) +
                                "x" + std::to_string(b.ncols));
  auto out = empty_mat(a.field, a.nrows, b.ncols);
  Accumulator<F> acc(a.field, b.ncols);
  for (std::size_t i = 0; i < a.nrows; ++i) {
    const auto &r = a.rows[i];
    for (std::size_t k = 0; k < r.size(); ++k)
      acc.add_scaled(r.val[k], b.rows[r.idx[k]]);
    out.rows[i] = acc.extract();
  }
  return out;
}

template <class F> SparseMat<F> transpose_impl(const SparseMat<F> &a) {
  auto out = empty_mat(a.field, a.ncols, a.nrows);
  for (std::size_t i = 0; i < a.nrows; ++i) {
    const auto &r = a.rows[i];
    for (std::size_t k = 0; k < r.size(); ++k) {
      out.rows[r.idx[k]].idx.push_back(static_cast<std::uint32_t>(i));
      out.rows[r.idx[k]].val.push_back(r.val[k]);
    }
  }
  return out;
}

template <class F> SparseRow<F> combine(const F &f, const SparseRow<F> &x, const SparseRow<F> &y,
                                        bool subtract) {
  SparseRow<F> r;
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x.idx[i] < y.idx[j])) {
      r.idx.push_back(x.idx[i]);
      r.val.push_back(x.val[i]);
      ++i;
    } else if (i == x.size() || y.idx[j] < x.idx[i]) {
      r.idx.push_back(y.idx[j]);
      r.val.push_back(subtract ? f.neg(y.val[j]) : y.val[j]);
      ++j;
    } else {
      auto v = subtract ? f.sub(x.val[i], y.val[j]) : f.add(x.val[i], y.val[j]);
      if (!f.is_zero(v)) {
        r.idx.push_back(x.idx[i]);
        r.val.push_back(v);
      }
      ++i;
      ++j;
    }
  }
  return r;
}

// Full reduced row echelon form of the rows of a, with rows sorted by pivot.
template <class F> Echelon<F> rref(const SparseMat<F> &a) {
  Echelon<F> e{a.field, a.ncols, {}, {}};
  Accumulator<F> acc(a.field, a.ncols);
  for (const auto &r : a.rows) {
    if (r.empty())
      continue;
    acc.load(r);
    insert_acc(acc, e);
  }
  // Sort by pivot, then back-substitute from the bottom.
  std::vector<std::size_t> order(e.rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return e.piv[x] < e.piv[y]; });
  Echelon<F> s{a.field, a.ncols, {}, {}};
  for (auto k : order) {
    s.rows.push_back(std::move(e.rows[k]));
    s.piv.push_back(e.piv[k]);
  }
  // Each row is already zero at earlier-inserted pivots; clear all other pivots.
  std::vector<long> row_of(a.ncols, -1);
  for (std::size_t k = 0; k < s.rows.size(); ++k)
    row_of[s.piv[k]] = static_cast<long>(k);
  for (std::size_t kk = s.rows.size(); kk-- > 0;) {
    acc.load(s.rows[kk]);
    // Eliminate pivots to the right in increasing order; rows below are final.
    bool changed = false;
    for (std::size_t t = 0; t < s.rows[kk].size(); ++t) {
      auto col = s.rows[kk].idx[t];
      long j = row_of[col];
      if (j > static_cast<long>(kk) && acc.nonzero_at(col)) {
        auto c = acc.at(col);
        acc.sub_scaled(c, s.rows[j]);
        changed = true;
      }
    }
    if (changed)
      s.rows[kk] = acc.extract();
    else
      acc.clear();
  }
  return s;
}

template <class F> SparseMat<F> kernel_impl(const SparseMat<F> &a) {
  auto e = rref(a);
  std::vector<long> free_pos(a.ncols, -1);
  std::vector<char> is_piv(a.ncols, 0);
  for (auto p : e.piv)
    is_piv[p] = 1;
  std::size_t nfree = 0;
  for (std::size_t j = 0; j < a.ncols; ++j)
    if (!is_piv[j])
      free_pos[j] = static_cast<long>(nfree++);
  auto out = empty_mat(a.field, nfree, a.ncols);
  for (std::size_t j = 0; j < a.ncols; ++j)
    if (!is_piv[j]) {
      out.rows[free_pos[j]].idx.push_back(static_cast<std::uint32_t>(j));
      out.rows[free_pos[j]].val.push_back(a.field.one());
    }
  for (std::size_t k = 0; k < e.rows.size(); ++k) {
    const auto &r = e.rows[k];
    for (std::size_t t = 0; t < r.size(); ++t) {
      if (r.idx[t] == e.piv[k])
        continue;
      auto &kr = out.rows[free_pos[r.idx[t]]];
      kr.idx.push_back(e.piv[k]);
      kr.val.push_back(a.field.neg(r.val[t]));
    }
  }
  for (auto &r : out.rows) {
    std::vector<std::size_t> ord(r.size());
    std::iota(ord.begin(), ord.end(), 0);
    std::sort(ord.begin(), ord.end(), [&](auto x, auto y) { return r.idx[x] < r.idx[y]; });
    SparseRow<F> s;
    for (auto o : ord) {
      s.idx.push_back(r.idx[o]);
      s.val.push_back(r.val[o]);
    }
    r = std::move(s);
  }
  return out;
}

template <class F> SparseMat<F> echelon_to_mat(const Echelon<F> &e) {
  SparseMat<F> m{e.field, e.rows.size(), e.ncols, e.rows};
  return m;
}

template <class F> const SparseMat<F> &as(const MatImpl &m) { return std::get<SparseMat<F>>(m); }

} // namespace
} // namespace detail

using namespace detail;

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix() : Matrix(FieldSpec::rationals(), 0, 0) {}

Matrix::Matrix(const FieldSpec &field, std::size_t rows, std::size_t cols)
    : field_(field), impl_(make_impl(field, rows, cols)) {}

Matrix Matrix::identity(const FieldSpec &field, std::size_t n) {
  Matrix m(field, n, n);
  std::visit(
      [&](auto &s) {
        for (std::size_t i = 0; i < n; ++i) {
          s.rows[i].idx.push_back(static_cast<std::uint32_t>(i));
          s.rows[i].val.push_back(s.field.one());
        }
      },
      m.impl_);
  return m;
}

Matrix Matrix::from_ints(const FieldSpec &field, const std::vector<std::vector<long>> &entries) {
  std::size_t r = entries.size(), c = r ? entries[0].size() : 0;
  Matrix m(field, r, c);
  std::visit(
      [&](auto &s) {
        for (std::size_t i = 0; i < r; ++i) {
          if (entries[i].size() != c)
            throw std::invalid_argument("ragged matrix literal");
          for (std::size_t j = 0; j < c; ++j) {
            auto v = s.field.from_int(entries[i][j]);
            if (!s.field.is_zero(v)) {
              s.rows[i].idx.push_back(static_cast<std::uint32_t>(j));
              s.rows[i].val.push_back(v);
            }
          }
        }
      },
      m.impl_);
  return m;
}

Matrix Matrix::from_rationals(const FieldSpec &field,
                              const std::vector<std::vector<mpq_class>> &entries) {
  std::size_t r = entries.size(), c = r ? entries[0].size() : 0;
  Matrix m(field, r, c);
  std::visit(
      [&](auto &s) {
        for (std::size_t i = 0; i < r; ++i) {
          if (entries[i].size() != c)
            throw std::invalid_argument("ragged matrix literal");
          for (std::size_t j = 0; j < c; ++j) {
            auto v = s.field.from_rational(entries[i][j]);
            if (!s.field.is_zero(v)) {
              s.rows[i].idx.push_back(static_cast<std::uint32_t>(j));
              s.rows[i].val.push_back(v);
            }
          }
        }
      },
      m.impl_);
  return m;
}

Matrix Matrix::from_index_map(const FieldSpec &field, std::size_t cols,
                              std::span<const long> map) {
  Matrix m(field, map.size(), cols);
  std::visit(
      [&](auto &s) {
        for (std::size_t i = 0; i < map.size(); ++i)
          if (map[i] >= 0) {
            if (static_cast<std::size_t>(map[i]) >= cols)
              throw std::out_of_range("index map target out of range");
            s.rows[i].idx.push_back(static_cast<std::uint32_t>(map[i]));
            s.rows[i].val.push_back(s.field.one());
          }
      },
      m.impl_);
  return m;
}

Matrix Matrix::from_entries(const FieldSpec &field, std::size_t rows, std::size_t cols,
                            std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry &a, const Entry &b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  Matrix m(field, rows, cols);
  std::visit(
      [&](auto &s) {
        for (std::size_t k = 0; k < entries.size();) {
          auto [i, j, v] = entries[k];
          if (i >= rows || j >= cols)
            throw std::out_of_range("matrix entry out of range");
          auto acc = s.field.from_rational(v);
          for (++k; k < entries.size() && entries[k].row == i && entries[k].col == j; ++k)
            acc = s.field.add(acc, s.field.from_rational(entries[k].value));
          if (!s.field.is_zero(acc)) {
            s.rows[i].idx.push_back(static_cast<std::uint32_t>(j));
            s.rows[i].val.push_back(acc);
          }
        }
      },
      m.impl_);
  return m;
}

std::size_t Matrix::rows() const {
  return std::visit([](const auto &s) { return s.nrows; }, impl_);
}
std::size_t Matrix::cols() const {
  return std::visit([](const auto &s) { return s.ncols; }, impl_);
}
std::size_t Matrix::nnz() const {
  return std::visit(
      [](const auto &s) {
        std::size_t n = 0;
        for (const auto &r : s.rows)
          n += r.size();
        return n;
      },
      impl_);
}
bool Matrix::is_zero() const { return nnz() == 0; }

mpq_class Matrix::get(std::size_t i, std::size_t j) const {
  return std::visit(
      [&](const auto &s) -> mpq_class {
        if (i >= s.nrows || j >= s.ncols)
          throw std::out_of_range("matrix index out of range");
        const auto &r = s.rows[i];
        auto it = std::lower_bound(r.idx.begin(), r.idx.end(), static_cast<std::uint32_t>(j));
        if (it == r.idx.end() || *it != j)
          return mpq_class(0);
        return s.field.to_rational(r.val[it - r.idx.begin()]);
      },
      impl_);
}

std::vector<std::pair<std::size_t, mpq_class>> Matrix::row_entries(std::size_t i) const {
  return std::visit(
      [&](const auto &s) {
        if (i >= s.nrows)
          throw std::out_of_range("matrix row out of range");
        std::vector<std::pair<std::size_t, mpq_class>> out;
        const auto &r = s.rows[i];
        for (std::size_t k = 0; k < r.size(); ++k)
          out.emplace_back(r.idx[k], s.field.to_rational(r.val[k]));
        return out;
      },
      impl_);
}

void Matrix::set(std::size_t i, std::size_t j, const mpq_class &value) {
  std::visit(
      [&](auto &s) {
        if (i >= s.nrows || j >= s.ncols)
          throw std::out_of_range("matrix index out of range");
        auto &r = s.rows[i];
        auto v = s.field.from_rational(value);
        auto it = std::lower_bound(r.idx.begin(), r.idx.end(), static_cast<std::uint32_t>(j));
        auto pos = it - r.idx.begin();
        if (it != r.idx.end() && *it == j) {
          if (s.field.is_zero(v)) {
            r.idx.erase(it);
            r.val.erase(r.val.begin() + pos);
          } else {
            r.val[pos] = v;
          }
        } else if (!s.field.is_zero(v)) {
          r.idx.insert(it, static_cast<std::uint32_t>(j));
          r.val.insert(r.val.begin() + pos, v);
        }
      },
      impl_);
}

Matrix Matrix::transpose() const {
  return Matrix(field_, std::visit([](const auto &s) -> MatImpl { return transpose_impl(s); }, impl_));
}

Matrix Matrix::operator*(const Matrix &rhs) const {
  if (!(field_ == rhs.field_))
    throw std::invalid_argument("field mismatch in product");
  return Matrix(field_, std::visit(
                            [&](const auto &s) -> MatImpl {
                              using M = std::decay_t<decltype(s)>;
                              return multiply(s, std::get<M>(rhs.impl_));
                            },
                            impl_));
}

namespace {
Matrix add_sub(const Matrix &a, const Matrix &b, bool subtract) {
  if (!(a.field() == b.field()) || a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix sum shape mismatch");
  return Matrix(a.field(), std::visit(
                               [&](const auto &s) -> MatImpl {
                                 using M = std::decay_t<decltype(s)>;
                                 const auto &t = std::get<M>(b.impl());
                                 M out = empty_mat(s.field, s.nrows, s.ncols);
                                 for (std::size_t i = 0; i < s.nrows; ++i)
                                   out.rows[i] = combine(s.field, s.rows[i], t.rows[i], subtract);
                                 return out;
                               },
                               a.impl()));
}
} // namespace

Matrix Matrix::operator+(const Matrix &rhs) const { return add_sub(*this, rhs, false); }
Matrix Matrix::operator-(const Matrix &rhs) const { return add_sub(*this, rhs, true); }

Matrix Matrix::scaled(const mpq_class &c) const {
  Matrix out = *this;
  std::visit(
      [&](auto &s) {
        auto v = s.field.from_rational(c);
        for (auto &r : s.rows) {
          if (s.field.is_zero(v)) {
            r.idx.clear();
            r.val.clear();
          } else {
            for (auto &x : r.val)
              x = s.field.mul(x, v);
          }
        }
      },
      out.impl_);
  return out;
}

bool Matrix::operator==(const Matrix &rhs) const {
  if (!(field_ == rhs.field_) || rows() != rhs.rows() || cols() != rhs.cols())
    return false;
  return std::visit(
      [&](const auto &s) {
        using M = std::decay_t<decltype(s)>;
        const auto &t = std::get<M>(rhs.impl_);
        for (std::size_t i = 0; i < s.nrows; ++i)
          if (s.rows[i].idx != t.rows[i].idx || s.rows[i].val != t.rows[i].val)
            return false;
        return true;
      },
      impl_);
}

Matrix Matrix::row(std::size_t i) const {
  std::size_t one[1] = {i};
  return select_rows(one);
}

Matrix Matrix::select_rows(std::span<const std::size_t> which) const {
  return Matrix(field_, std::visit(
                            [&](const auto &s) -> MatImpl {
                              auto out = empty_mat(s.field, which.size(), s.ncols);
                              for (std::size_t k = 0; k < which.size(); ++k) {
                                if (which[k] >= s.nrows)
                                  throw std::out_of_range("row selection out of range");
                                out.rows[k] = s.rows[which[k]];
                              }
                              return out;
                            },
                            impl_));
}

Matrix Matrix::select_cols(std::span<const std::size_t> which) const {
  std::vector<long> map(cols(), -1);
  for (std::size_t k = 0; k < which.size(); ++k) {
    if (which[k] >= cols())
      throw std::out_of_range("column selection out of range");
    map[which[k]] = static_cast<long>(k);
  }
  return remap_cols(which.size(), map);
}

Matrix Matrix::remap_cols(std::size_t new_cols, std::span<const long> map) const {
  if (map.size() != cols())
    throw std::invalid_argument("column map has wrong length");
  return Matrix(field_, std::visit(
                            [&](const auto &s) -> MatImpl {
                              using M = std::decay_t<decltype(s)>;
                              M out = empty_mat(s.field, s.nrows, new_cols);
                              std::vector<std::pair<std::uint32_t, std::size_t>> buf;
                              for (std::size_t i = 0; i < s.nrows; ++i) {
                                const auto &r = s.rows[i];
                                buf.clear();
                                for (std::size_t k = 0; k < r.size(); ++k) {
                                  long t = map[r.idx[k]];
                                  if (t >= 0)
                                    buf.emplace_back(static_cast<std::uint32_t>(t), k);
                                }
                                std::sort(buf.begin(), buf.end());
                                for (auto &[t, k] : buf) {
                                  out.rows[i].idx.push_back(t);
                                  out.rows[i].val.push_back(r.val[k]);
                                }
                              }
                              return out;
                            },
                            impl_));
}

Matrix Matrix::append_rows(const Matrix &below) const {
  Matrix parts[2] = {*this, below};
  return vstack(parts, cols(), field_);
}

Matrix Matrix::vstack(std::span<const Matrix> blocks, std::size_t cols, const FieldSpec &field) {
  std::size_t total = 0;
  for (const auto &b : blocks) {
    if (b.cols() != cols || !(b.field() == field))
      throw std::invalid_argument("vstack shape mismatch");
    total += b.rows();
  }
  Matrix out(field, total, cols);
  std::visit(
      [&](auto &s) {
        using M = std::decay_t<decltype(s)>;
        std::size_t at = 0;
        for (const auto &b : blocks)
          for (const auto &r : std::get<M>(b.impl()).rows)
            s.rows[at++] = r;
      },
      out.impl_);
  return out;
}

Matrix Matrix::hstack(std::span<const Matrix> blocks, std::size_t rows, const FieldSpec &field) {
  std::size_t total = 0;
  for (const auto &b : blocks) {
    if (b.rows() != rows || !(b.field() == field))
      throw std::invalid_argument("hstack shape mismatch");
    total += b.cols();
  }
  Matrix out(field, rows, total);
  std::visit(
      [&](auto &s) {
        using M = std::decay_t<decltype(s)>;
        std::uint32_t off = 0;
        for (const auto &b : blocks) {
          const auto &t = std::get<M>(b.impl());
          for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t k = 0; k < t.rows[i].size(); ++k) {
              s.rows[i].idx.push_back(t.rows[i].idx[k] + off);
              s.rows[i].val.push_back(t.rows[i].val[k]);
            }
          off += static_cast<std::uint32_t>(t.ncols);
        }
      },
      out.impl_);
  return out;
}

Matrix Matrix::block_diag(const Matrix &a, const Matrix &b) {
  std::vector<long> shift_a(a.cols()), shift_b(b.cols());
  std::iota(shift_a.begin(), shift_a.end(), 0L);
  std::iota(shift_b.begin(), shift_b.end(), static_cast<long>(a.cols()));
  std::size_t c = a.cols() + b.cols();
  Matrix parts[2] = {a.remap_cols(c, shift_a), b.remap_cols(c, shift_b)};
  return vstack(parts, c, a.field());
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows(); ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols(); ++j)
      os << (j ? " " : "") << get(i, j).get_str();
    os << "]\n";
  }
  return os.str();
}

Matrix apply_to_rows(const Matrix &map, const Matrix &rows) {
  if (rows.cols() != map.cols())
    throw std::invalid_argument("apply_to_rows: dimension mismatch");
  return rows * map.transpose();
}

// ---------------------------------------------------------------------------
// Elimination

RowReduction row_reduce(const Matrix &a) {
  std::size_t m = a.rows(), n = a.cols();
  // Augment with the identity and eliminate with pivots restricted to A's columns.
  Matrix aug = Matrix::hstack(std::array<Matrix, 2>{a, Matrix::identity(a.field(), m)}, m, a.field());
  RowReduction out;
  std::visit(
      [&](const auto &s) {
        using M = std::decay_t<decltype(s)>;
        using F = decltype(s.field);
        Echelon<F> e{s.field, n + m, {}, {}};
        std::vector<SparseRow<F>> zero_rows;
        Accumulator<F> acc(s.field, n + m);
        for (const auto &r : s.rows) {
          acc.load(r);
          reduce_acc(acc, e, nullptr);
          long p = acc.first_nonzero_below(static_cast<std::uint32_t>(n));
          if (p < 0) {
            zero_rows.push_back(acc.extract());
            continue;
          }
          auto scale = s.field.inv(acc.at(static_cast<std::uint32_t>(p)));
          e.rows.push_back(acc.extract(scale));
          e.piv.push_back(static_cast<std::uint32_t>(p));
        }
        // Sort by pivot and back-substitute.
        std::vector<std::size_t> order(e.rows.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](auto x, auto y) { return e.piv[x] < e.piv[y]; });
        std::vector<SparseRow<F>> rows;
        std::vector<std::uint32_t> piv;
        for (auto k : order) {
          rows.push_back(std::move(e.rows[k]));
          piv.push_back(e.piv[k]);
        }
        std::vector<long> row_of(n, -1);
        for (std::size_t k = 0; k < rows.size(); ++k)
          row_of[piv[k]] = static_cast<long>(k);
        for (std::size_t kk = rows.size(); kk-- > 0;) {
          acc.load(rows[kk]);
          for (std::size_t t = 0; t < rows[kk].size(); ++t) {
            auto col = rows[kk].idx[t];
            if (col >= n)
              break;
            long j = row_of[col];
            if (j > static_cast<long>(kk) && acc.nonzero_at(col)) {
              auto c = acc.at(col);
              acc.sub_scaled(c, rows[j]);
            }
          }
          rows[kk] = acc.extract();
        }
        M red = empty_mat(s.field, rows.size(), n);
        M tr = empty_mat(s.field, m, m);
        auto split = [&](const SparseRow<F> &r, SparseRow<F> *left, SparseRow<F> &right) {
          for (std::size_t t = 0; t < r.size(); ++t) {
            if (r.idx[t] < n) {
              if (left) {
                left->idx.push_back(r.idx[t]);
                left->val.push_back(r.val[t]);
              }
            } else {
              right.idx.push_back(static_cast<std::uint32_t>(r.idx[t] - n));
              right.val.push_back(r.val[t]);
            }
          }
        };
        for (std::size_t k = 0; k < rows.size(); ++k)
          split(rows[k], &red.rows[k], tr.rows[k]);
        for (std::size_t k = 0; k < zero_rows.size(); ++k)
          split(zero_rows[k], nullptr, tr.rows[rows.size() + k]);
        out.rank = rows.size();
        for (auto p : piv)
          out.pivots.push_back(p);
        out.reduced = Matrix(a.field(), MatImpl(std::move(red)));
        out.transform = Matrix(a.field(), MatImpl(std::move(tr)));
      },
      aug.impl());
  return out;
}

std::size_t rank(const Matrix &a) { return Subspace::span(a).dim(); }

Matrix kernel(const Matrix &a) {
  return Matrix(a.field(), std::visit([](const auto &s) -> MatImpl { return kernel_impl(s); }, a.impl()));
}

Matrix left_kernel(const Matrix &a) { return kernel(a.transpose()); }

Matrix image(const Matrix &a) { return Subspace::span(a.transpose()).basis(); }

bool solve(const Matrix &a, const Matrix &b, Matrix &x) {
  if (a.rows() != b.rows())
    throw std::invalid_argument("solve: dimension mismatch");
  auto rr = row_reduce(a);
  Matrix tb = rr.transform * b; // rows 0..rank-1 give pivot values, the rest must vanish
  for (std::size_t i = rr.rank; i < tb.rows(); ++i)
    for (std::size_t j = 0; j < tb.cols(); ++j)
      if (tb.get(i, j) != 0)
        return false;
  std::vector<long> map(tb.rows(), -1);
  for (std::size_t k = 0; k < rr.rank; ++k)
    map[k] = static_cast<long>(rr.pivots[k]);
  // x = P * tb where P places row k at pivot position.
  Matrix place = Matrix::from_index_map(a.field(), a.cols(), map).transpose();
  x = place * tb;
  return true;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace() : Subspace(FieldSpec::rationals(), 0) {}

Subspace::Subspace(const FieldSpec &field, std::size_t ambient)
    : field_(field), ambient_(ambient), impl_(make_echelon(field, ambient)) {}

Subspace Subspace::span(const Matrix &rows) {
  Subspace s(rows.field(), rows.cols());
  s.insert(rows);
  return s;
}

std::size_t Subspace::dim() const {
  return std::visit([](const auto &e) { return e.rows.size(); }, impl_);
}

std::size_t Subspace::insert(const Matrix &rows) {
  if (rows.cols() != ambient_ || !(rows.field() == field_))
    throw std::invalid_argument("subspace insert: dimension mismatch");
  return std::visit(
      [&](auto &e) {
        using F = decltype(e.field);
        const auto &m = std::get<SparseMat<F>>(rows.impl());
        Accumulator<F> acc(e.field, ambient_);
        std::size_t added = 0;
        for (const auto &r : m.rows) {
          if (r.empty())
            continue;
          acc.load(r);
          added += insert_acc(acc, e);
        }
        return added;
      },
      impl_);
}

Matrix Subspace::reduce(const Matrix &rows) const {
  if (rows.cols() != ambient_ || !(rows.field() == field_))
    throw std::invalid_argument("subspace reduce: dimension mismatch");
  return Matrix(field_, std::visit(
                            [&](const auto &e) -> MatImpl {
                              using F = decltype(e.field);
                              const auto &m = std::get<SparseMat<F>>(rows.impl());
                              auto out = empty_mat(e.field, m.nrows, ambient_);
                              Accumulator<F> acc(e.field, ambient_);
                              for (std::size_t i = 0; i < m.nrows; ++i) {
                                acc.load(m.rows[i]);
                                reduce_acc(acc, e, nullptr);
                                out.rows[i] = acc.extract();
                              }
                              return out;
                            },
                            impl_));
}

bool Subspace::contains(const Matrix &rows) const { return reduce(rows).is_zero(); }

Matrix Subspace::coordinates(const Matrix &rows) const {
  if (rows.cols() != ambient_ || !(rows.field() == field_))
    throw std::invalid_argument("subspace coordinates: dimension mismatch");
  return Matrix(field_, std::visit(
                            [&](const auto &e) -> MatImpl {
                              using F = decltype(e.field);
                              const auto &m = std::get<SparseMat<F>>(rows.impl());
                              auto out = empty_mat(e.field, m.nrows, e.rows.size());
                              Accumulator<F> acc(e.field, ambient_);
                              std::vector<typename F::Elem> coeff(e.rows.size(), e.field.zero());
                              for (std::size_t i = 0; i < m.nrows; ++i) {
                                acc.load(m.rows[i]);
                                reduce_acc(acc, e, &coeff);
                                if (acc.first_nonzero() >= 0)
                                  throw std::invalid_argument("vector not in subspace");
                                acc.clear();
                                for (std::size_t k = 0; k < coeff.size(); ++k)
                                  if (!e.field.is_zero(coeff[k])) {
                                    out.rows[i].idx.push_back(static_cast<std::uint32_t>(k));
                                    out.rows[i].val.push_back(coeff[k]);
                                    coeff[k] = e.field.zero();
                                  }
                              }
                              return out;
                            },
                            impl_));
}

Matrix Subspace::basis() const {
  return Matrix(field_, std::visit([](const auto &e) -> MatImpl { return echelon_to_mat(e); }, impl_));
}

std::vector<std::size_t> Subspace::pivots() const {
  return std::visit([](const auto &e) { return std::vector<std::size_t>(e.piv.begin(), e.piv.end()); },
                    impl_);
}

Subspace Subspace::sum(const Subspace &other) const {
  Subspace s = *this;
  s.insert(other.basis());
  return s;
}

Subspace Subspace::intersect(const Subspace &other) const {
  if (other.ambient_ != ambient_ || !(other.field_ == field_))
    throw std::invalid_argument("subspace intersect: dimension mismatch");
  // c * W in U  <=>  c * reduce_U(W) = 0.
  Matrix w = other.basis();
  Matrix r = reduce(w);
  Matrix c = kernel(r.transpose());
  return Subspace::span(c * w);
}

bool Subspace::operator==(const Subspace &other) const {
  return ambient_ == other.ambient_ && field_ == other.field_ && dim() == other.dim() &&
         contains(other.basis());
}

Subspace preimage(const Matrix &a, const Subspace &target) {
  if (a.rows() != target.ambient())
    throw std::invalid_argument("preimage: dimension mismatch");
  Matrix images = target.reduce(a.transpose()); // row j = image of e_j modulo U
  return Subspace::span(kernel(images.transpose()));
}

QuotientMap quotient_map(const Subspace &v, const Subspace &u) {
  if (!v.contains(u.basis()))
    throw std::invalid_argument("quotient_map: U is not contained in V");
  QuotientMap q;
  q.sub = u;
  q.complement = Subspace(v.field(), v.ambient());
  q.complement.insert(u.reduce(v.basis()));
  q.dim = q.complement.dim();
  return q;
}

Matrix QuotientMap::project(const Matrix &rows) const {
  return complement.coordinates(sub.reduce(rows));
}

} // namespace fig
