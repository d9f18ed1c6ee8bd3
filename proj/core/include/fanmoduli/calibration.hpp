#pragma once

#include <compare>

#include "fanmoduli/combinatorial_type.hpp"
#include "fanmoduli/matrix.hpp"

namespace fanmoduli {

// The d x n matrix of a calibration h; column i is h(e_i). The columns
// listed in chart() form the identity matrix. The standard chart is [1, d];
// other charts only arise as sampling charts of boundary scans.
class Calibration {
 public:
  Calibration() = default;
  // Throws PreconditionError("not_standard") when the chart columns are not
  // the identity, DimensionError on malformed shapes.
  explicit Calibration(RationalMatrix matrix);
  Calibration(RationalMatrix matrix, Subset chart);

  // Standard calibration [I_d | tail].
  static Calibration from_tail(std::size_t d, const std::vector<Vector>& tail);

  std::size_t d() const noexcept { return matrix_.rows(); }
  std::size_t n() const noexcept { return matrix_.cols(); }
  const RationalMatrix& matrix() const noexcept { return matrix_; }
  const Subset& chart() const noexcept { return chart_; }
  bool standard() const;

  // 1-based column access.
  Vector column(int i) const { return matrix_.column(static_cast<std::size_t>(i - 1)); }
  RationalMatrix columns(const Subset& s) const;

  friend bool operator==(const Calibration&, const Calibration&) = default;
  friend std::strong_ordering operator<=>(const Calibration& a, const Calibration& b) {
    return a.matrix_ <=> b.matrix_;
  }

 private:
  RationalMatrix matrix_;
  Subset chart_;
};

// Reduces an arbitrary rank-d matrix to the calibration L*m whose chart
// columns are the identity. Throws PreconditionError("not_in_chart").
Calibration standardize(const RationalMatrix& m, const Subset& chart);

Subset standard_chart(std::size_t d);

namespace reference {

// All-(-1) last column; admissible for types::simplex(d).
Calibration simplex(int d);
// Unit roots at angles 2*pi*k/n rounded to 1/1000, then standardized.
Calibration cycle(int n);
// Identity; admissible for types::orthant(d).
Calibration orthant(int d);
// Base point of types::p1_times_p2(): v4 = (-1,0,0), v5 = (0,-1,-1).
Calibration p1_times_p2();

}  // namespace reference

}  // namespace fanmoduli
