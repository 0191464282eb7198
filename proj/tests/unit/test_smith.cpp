#include <algorithm>
#include <numeric>
#include <random>

#include "catsieve/smith.hpp"
#include "doctest.h"

using namespace catsieve;

namespace {

BigInt laplace(const std::vector<std::vector<BigInt>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  BigInt total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<BigInt> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(row);
    }
    BigInt term = m[0][j] * laplace(minor);
    total += (j % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// d_k = gcd of k×k minors; invariant factor k is d_k / d_(k-1).
std::vector<BigInt> determinantal_invariants(const IntMatrix& m) {
  std::vector<BigInt> out;
  BigInt prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(m.rows(), k, 0, cur, rs);
    subsets(m.cols(), k, 0, cur, cs);
    BigInt g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<BigInt>> sub(k, std::vector<BigInt>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(r[i], c[j]);
        g = boost::multiprecision::gcd(g, BigInt(abs(laplace(sub))));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t maxdim, int spread) {
  std::uniform_int_distribution<std::size_t> dim(1, maxdim);
  std::uniform_int_distribution<int> val(-spread, spread);
  IntMatrix m(dim(rng), dim(rng));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = val(rng);
  return m;
}

}  // namespace

TEST_CASE("smith form of a small example") {
  IntMatrix m(2, 2, {2, 4, 6, 8});
  auto s = smith_normal_form(m);
  CHECK(s.invariants == std::vector<BigInt>{2, 4});
  CHECK(s.d == s.u * m * s.v);
}

TEST_CASE("smith form of diagonal and zero matrices") {
  IntMatrix d(3, 3, {6, 0, 0, 0, 4, 0, 0, 0, 0});
  CHECK(invariant_factors(d) == std::vector<BigInt>{2, 12});
  IntMatrix z(2, 3);
  auto s = smith_normal_form(z);
  CHECK(s.invariants.empty());
  CHECK(s.d.is_zero());
}

TEST_CASE("random matrices factor as D = U M V") {
  std::mt19937 rng(20261019);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix m = random_matrix(rng, 8, 9);
    auto s = smith_normal_form(m);
    INFO("trial " << trial);
    CHECK(s.d == s.u * m * s.v);
    CHECK(is_unimodular(s.u));
    CHECK(is_unimodular(s.v));
    for (std::size_t i = 0; i < s.d.rows(); ++i)
      for (std::size_t j = 0; j < s.d.cols(); ++j)
        if (i != j) CHECK(s.d(i, j) == 0);
    for (std::size_t i = 0; i + 1 < s.invariants.size(); ++i) CHECK(s.invariants[i + 1] % s.invariants[i] == 0);
    for (std::size_t i = 0; i < s.invariants.size(); ++i) CHECK(s.d(i, i) == s.invariants[i]);
  }
}

TEST_CASE("invariants agree with determinantal divisors") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix m = random_matrix(rng, 4, 6);
    INFO("trial " << trial);
    CHECK(invariant_factors(m) == determinantal_invariants(m));
  }
}

TEST_CASE("invariants do not depend on row and column order") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix m = random_matrix(rng, 6, 5);
    std::vector<std::size_t> rp(m.rows()), cp(m.cols());
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    IntMatrix p(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) p(i, j) = m(rp[i], cp[j]);
    CHECK(invariant_factors(p) == invariant_factors(m));
  }
}

TEST_CASE("sparse rank profile matches the dense form") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> val(-2, 2);
  for (int trial = 0; trial < 50; ++trial) {
    SparseIntMatrix s;
    s.rows = 1 + trial % 7;
    s.cols = 1 + (trial * 3) % 8;
    s.entries.resize(s.rows);
    for (std::size_t i = 0; i < s.rows; ++i)
      for (std::size_t j = 0; j < s.cols; ++j)
        if (int v = val(rng) * (rng() % 2); v != 0) s.entries[i].emplace_back(static_cast<int>(j), v);
    auto inv = invariant_factors(s.dense());
    auto prof = rank_profile(s);
    CHECK(prof.rank == inv.size());
    std::vector<BigInt> torsion;
    for (const auto& v : inv)
      if (v > 1) torsion.push_back(v);
    CHECK(prof.torsion == torsion);
  }
}

TEST_CASE("determinant and unimodularity") {
  CHECK(determinant(IntMatrix(2, 2, {1, 2, 3, 4})) == -2);
  CHECK(is_unimodular(IntMatrix(2, 2, {2, 1, 1, 1})));
  CHECK_FALSE(is_unimodular(IntMatrix(2, 2, {2, 0, 0, 1})));
}
