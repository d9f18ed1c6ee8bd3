#include "fanmoduli/random.hpp"

namespace fanmoduli {

long Rng::integer(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

Rational Rng::rational(long bound, long den) {
  const long q = integer(1, den);
  Rational out(integer(-bound * q, bound * q), q);
  out.canonicalize();
  return out;
}

Calibration random_calibration(Rng& rng, std::size_t d, std::size_t n, long bound, long den) {
  std::vector<Vector> tail;
  for (std::size_t j = d; j < n; ++j) {
    Vector v;
    for (std::size_t i = 0; i < d; ++i) v.push_back(rng.rational(bound, den));
    tail.push_back(std::move(v));
  }
  return Calibration::from_tail(d, tail);
}

}  // namespace fanmoduli
