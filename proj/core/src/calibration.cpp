#include "fanmoduli/calibration.hpp"

#include <cmath>
#include <numbers>

#include "fanmoduli/errors.hpp"
#include "fanmoduli/linalg.hpp"

namespace fanmoduli {

namespace {

std::vector<std::size_t> zero_based(const Subset& s) {
  std::vector<std::size_t> out;
  for (int i : s) out.push_back(static_cast<std::size_t>(i - 1));
  return out;
}

}  // namespace

Subset standard_chart(std::size_t d) {
  Subset s;
  for (std::size_t i = 1; i <= d; ++i) s.push_back(static_cast<int>(i));
  return s;
}

Calibration::Calibration(RationalMatrix matrix)
    : Calibration(matrix, standard_chart(matrix.rows())) {}

Calibration::Calibration(RationalMatrix matrix, Subset chart)
    : matrix_(std::move(matrix)), chart_(std::move(chart)) {
  if (matrix_.rows() == 0 || matrix_.cols() < matrix_.rows())
    throw DimensionError("calibration needs 1 <= d <= n");
  if (chart_.size() != matrix_.rows())
    throw DimensionError("chart must have d elements");
  for (int i : chart_)
    if (i < 1 || static_cast<std::size_t>(i) > matrix_.cols())
      throw DimensionError("chart index outside [1, n]");
  if (!(columns(chart_) == RationalMatrix::identity(matrix_.rows())))
    throw PreconditionError("not_standard", "chart columns are not the identity");
}

Calibration Calibration::from_tail(std::size_t d, const std::vector<Vector>& tail) {
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < d; ++i) {
    Vector e(d, 0);
    e[i] = 1;
    cols.push_back(std::move(e));
  }
  cols.insert(cols.end(), tail.begin(), tail.end());
  return Calibration(RationalMatrix::from_columns(cols, d));
}

bool Calibration::standard() const { return chart_ == standard_chart(d()); }

RationalMatrix Calibration::columns(const Subset& s) const {
  const auto idx = zero_based(s);
  return matrix_.select_columns(idx);
}

Calibration standardize(const RationalMatrix& m, const Subset& chart) {
  const auto idx = zero_based(chart);
  const RationalMatrix block = m.select_columns(idx);
  if (!block.square() || det(block) == 0)
    throw PreconditionError("not_in_chart", "chart columns are not invertible");
  return Calibration(inverse(block) * m, chart);
}

namespace reference {

Calibration simplex(int d) {
  return Calibration::from_tail(static_cast<std::size_t>(d),
                                {Vector(static_cast<std::size_t>(d), Rational(-1))});
}

Calibration cycle(int n) {
  std::vector<Vector> cols;
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * std::numbers::pi * k / n;
    const auto x = static_cast<long>(std::lround(std::cos(t) * 1000));
    const auto y = static_cast<long>(std::lround(std::sin(t) * 1000));
    cols.push_back({Rational(x, 1000), Rational(y, 1000)});
  }
  for (auto& c : cols)
    for (auto& q : c) q.canonicalize();
  return standardize(RationalMatrix::from_columns(cols, 2), {1, 2});
}

Calibration orthant(int d) {
  return Calibration(RationalMatrix::identity(static_cast<std::size_t>(d)));
}

Calibration p1_times_p2() { return Calibration::from_tail(3, {{-1, 0, 0}, {0, -1, -1}}); }

}  // namespace reference

}  // namespace fanmoduli
