#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "fanmoduli/rational.hpp"

namespace fanmoduli {

using Vector = std::vector<Rational>;

// Dense row-major matrix of rationals. Indices are 0-based in the C++ API;
// all external formats (JSON, CLI) are 1-based.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_columns(std::span<const Vector> columns,
                                     std::size_t rows);
  static RationalMatrix from_rows(std::span<const Vector> rows,
                                  std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  std::vector<Vector> columns() const;

  RationalMatrix select_columns(std::span<const std::size_t> idx) const;
  RationalMatrix select_rows(std::span<const std::size_t> idx) const;
  RationalMatrix transpose() const;

  const std::vector<Rational>& entries() const noexcept { return entries_; }

  friend RationalMatrix operator*(const RationalMatrix& a,
                                  const RationalMatrix& b);
  friend Vector operator*(const RationalMatrix& a, const Vector& v);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);
  // Shape first, then row-major lexicographic order of the entries.
  friend std::strong_ordering operator<=>(const RationalMatrix& a,
                                          const RationalMatrix& b);

  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

std::strong_ordering compare(const Rational& a, const Rational& b);

}  // namespace fanmoduli
