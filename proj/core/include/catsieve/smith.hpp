#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace catsieve {

using BigInt = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, const std::vector<std::int64_t>& entries);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const IntMatrix& other) const = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row a += k·row b
  void add_row(std::size_t a, std::size_t b, const BigInt& k);
  // col a += k·col b
  void add_col(std::size_t a, std::size_t b, const BigInt& k);
  void negate_row(std::size_t a);

  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
BigInt determinant(const IntMatrix& m);
bool is_unimodular(const IntMatrix& m);

struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  // Nonzero diagonal entries, each dividing the next.
  std::vector<BigInt> invariants;
};

// D = U·M·V with U, V unimodular. Pivots are entries of least absolute value.
SmithForm smith_normal_form(const IntMatrix& m);
// Same diagonal without tracking U and V.
std::vector<BigInt> invariant_factors(const IntMatrix& m);

// Rows of (column, value) pairs sorted by column.
struct SparseIntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<int, std::int64_t>>> entries;

  IntMatrix dense() const;
};

struct RankProfile {
  std::size_t rank = 0;
  // Invariant factors greater than one, each dividing the next.
  std::vector<BigInt> torsion;
};

// Eliminates unit pivots sparsely and finishes the remainder with the dense
// form; falls back to exact arithmetic throughout if 64 bits overflow.
RankProfile rank_profile(const SparseIntMatrix& m);

}  // namespace catsieve
