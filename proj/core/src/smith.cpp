#include "catsieve/smith.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace catsieve {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, const std::vector<std::int64_t>& entries)
    : rows_(rows), cols_(cols), data_(entries.begin(), entries.end()) {
  if (entries.size() != rows * cols) throw std::invalid_argument("matrix entry count");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row(std::size_t a, std::size_t b, const BigInt& k) {
  for (std::size_t j = 0; j < cols_; ++j)
    if (!(*this)(b, j).is_zero()) (*this)(a, j) += k * (*this)(b, j);
}

void IntMatrix::add_col(std::size_t a, std::size_t b, const BigInt& k) {
  for (std::size_t i = 0; i < rows_; ++i)
    if (!(*this)(i, b).is_zero()) (*this)(i, a) += k * (*this)(i, b);
}

void IntMatrix::negate_row(std::size_t a) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) = -(*this)(a, j);
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x.is_zero(); });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not multiply");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  BigInt d = determinant(m);
  return d == 1 || d == -1;
}

namespace {

BigInt magnitude(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Reduces d in place; u and v may be null.
void reduce(IntMatrix& d, IntMatrix* u, IntMatrix* v) {
  const std::size_t r = d.rows();
  const std::size_t c = d.cols();
  auto swap_r = [&](std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    if (u) u->swap_rows(a, b);
  };
  auto swap_c = [&](std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    if (v) v->swap_cols(a, b);
  };
  auto add_r = [&](std::size_t a, std::size_t b, const BigInt& k) {
    d.add_row(a, b, k);
    if (u) u->add_row(a, b, k);
  };
  auto add_c = [&](std::size_t a, std::size_t b, const BigInt& k) {
    d.add_col(a, b, k);
    if (v) v->add_col(a, b, k);
  };

  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    std::size_t pi = r, pj = c;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j)
        if (!d(i, j).is_zero() && (pi == r || magnitude(d(i, j)) < magnitude(d(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == r) break;
    swap_r(t, pi);
    swap_c(t, pj);
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i)
        if (!d(i, t).is_zero()) {
          BigInt q = d(i, t) / d(t, t);
          if (!q.is_zero()) add_r(i, t, -q);
          if (!d(i, t).is_zero()) clean = false;
        }
      for (std::size_t j = t + 1; j < c; ++j)
        if (!d(t, j).is_zero()) {
          BigInt q = d(t, j) / d(t, t);
          if (!q.is_zero()) add_c(j, t, -q);
          if (!d(t, j).is_zero()) clean = false;
        }
      if (!clean) {
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < r; ++i)
          if (!d(i, t).is_zero() && magnitude(d(i, t)) < magnitude(d(bi, bj))) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < c; ++j)
          if (!d(t, j).is_zero() && magnitude(d(t, j)) < magnitude(d(bi, bj))) {
            bi = t;
            bj = j;
          }
        swap_r(t, bi);
        swap_c(t, bj);
        continue;
      }
      std::size_t bad = r;
      for (std::size_t i = t + 1; i < r && bad == r; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (BigInt(d(i, j) % d(t, t)) != 0) {
            bad = i;
            break;
          }
      if (bad == r) break;
      add_r(t, bad, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      if (u) u->negate_row(t);
    }
  }
}

std::vector<BigInt> diagonal(const IntMatrix& d) {
  std::vector<BigInt> out;
  for (std::size_t t = 0; t < std::min(d.rows(), d.cols()) && !d(t, t).is_zero(); ++t) out.push_back(d(t, t));
  return out;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm s{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()), {}};
  reduce(s.d, &s.u, &s.v);
  s.invariants = diagonal(s.d);
  return s;
}

std::vector<BigInt> invariant_factors(const IntMatrix& m) {
  IntMatrix d = m;
  reduce(d, nullptr, nullptr);
  return diagonal(d);
}

IntMatrix SparseIntMatrix::dense() const {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (const auto& [j, x] : entries[i]) m(i, static_cast<std::size_t>(j)) = x;
  return m;
}

namespace {

struct Overflow {};

using Row = std::vector<std::pair<int, std::int64_t>>;

// a - k·b over sorted sparse rows.
Row subtract(const Row& a, const Row& b, std::int64_t k) {
  Row out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  auto push_scaled = [&](int col, std::int64_t base, std::int64_t x) {
    std::int64_t prod, val;
    if (__builtin_mul_overflow(k, x, &prod) || __builtin_sub_overflow(base, prod, &val)) throw Overflow{};
    if (val != 0) out.emplace_back(col, val);
  };
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      push_scaled(b[j].first, 0, b[j].second);
      ++j;
    } else {
      push_scaled(a[i].first, a[i].second, b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

const std::int64_t* lookup(const Row& r, int col) {
  auto it = std::lower_bound(r.begin(), r.end(), std::make_pair(col, std::numeric_limits<std::int64_t>::min()));
  return it != r.end() && it->first == col ? &it->second : nullptr;
}

RankProfile from_invariants(std::size_t units, const std::vector<BigInt>& inv) {
  RankProfile p{units + inv.size(), {}};
  for (const auto& x : inv)
    if (x > 1) p.torsion.push_back(x);
  return p;
}

RankProfile sparse_profile(const SparseIntMatrix& m) {
  std::vector<Row> rows = m.entries;
  rows.resize(m.rows);
  for (auto& r : rows) {
    std::sort(r.begin(), r.end());
    r.erase(std::remove_if(r.begin(), r.end(), [](const auto& e) { return e.second == 0; }), r.end());
  }
  std::vector<std::vector<int>> col_rows(m.cols);
  for (int i = 0; i < static_cast<int>(rows.size()); ++i)
    for (const auto& e : rows[i]) col_rows[e.first].push_back(i);
  std::vector<bool> alive(rows.size(), true);
  std::vector<int> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return rows[a].size() < rows[b].size(); });

  std::size_t units = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int r : order) {
      if (!alive[r] || rows[r].empty()) continue;
      int col = -1;
      std::int64_t pivot = 0;
      for (const auto& [c, x] : rows[r])
        if ((x == 1 || x == -1) && (col < 0 || col_rows[c].size() < col_rows[col].size())) {
          col = c;
          pivot = x;
        }
      if (col < 0) continue;
      const std::vector<int> touched = col_rows[col];
      for (int s : touched) {
        if (s == r || !alive[s]) continue;
        const std::int64_t* a = lookup(rows[s], col);
        if (!a) continue;
        if (*a == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
        Row updated = subtract(rows[s], rows[r], *a * pivot);
        for (const auto& e : updated)
          if (!lookup(rows[s], e.first)) col_rows[e.first].push_back(s);
        rows[s] = std::move(updated);
      }
      alive[r] = false;
      ++units;
      progress = true;
    }
  }

  std::vector<int> live_rows;
  std::vector<int> col_map(m.cols, -1);
  int ncols = 0;
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
    if (!alive[i] || rows[i].empty()) continue;
    live_rows.push_back(i);
    for (const auto& e : rows[i])
      if (col_map[e.first] < 0) col_map[e.first] = ncols++;
  }
  IntMatrix rest(live_rows.size(), static_cast<std::size_t>(ncols));
  for (std::size_t i = 0; i < live_rows.size(); ++i)
    for (const auto& [c, x] : rows[live_rows[i]]) rest(i, static_cast<std::size_t>(col_map[c])) = x;
  return from_invariants(units, invariant_factors(rest));
}

}  // namespace

RankProfile rank_profile(const SparseIntMatrix& m) {
  try {
    return sparse_profile(m);
  } catch (const Overflow&) {
    return from_invariants(0, invariant_factors(m.dense()));
  }
}

}  // namespace catsieve
