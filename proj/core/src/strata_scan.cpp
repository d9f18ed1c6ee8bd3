#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <thread>

#include "fanmoduli/degeneration.hpp"
#include "fanmoduli/errors.hpp"
#include "fanmoduli/linalg.hpp"
#include "fanmoduli/random.hpp"

namespace fanmoduli {

namespace {

struct Coordinate {
  std::size_t row;
  std::size_t col;  // 0-based column outside the chart
};

Rational jittered(Rng& rng) {
  const Rational grid(rng.integer(-2, 2));
  Rational jitter(rng.integer(-3, 3), 8);
  jitter.canonicalize();
  return grid + jitter;
}

Rational sparse(Rng& rng) {
  if (rng.coin()) return 0;
  const long v = rng.integer(1, 2);
  return rng.coin() ? Rational(v) : Rational(-v);
}

// Sets one coordinate of `m` so that det(columns of cone) = 0, if the
// determinant depends on some coordinate of the cone (the last such one
// is used; the determinant is affine in each single coordinate).
void solve_zero(RationalMatrix& m, const Subset& cone, const std::vector<Coordinate>& coords) {
  std::vector<std::size_t> idx;
  for (int i : cone) idx.push_back(static_cast<std::size_t>(i - 1));
  for (auto it = coords.rbegin(); it != coords.rend(); ++it) {
    if (std::find(idx.begin(), idx.end(), it->col) == idx.end()) continue;
    const Rational saved = m(it->row, it->col);
    m(it->row, it->col) = 0;
    const Rational at0 = det(m.select_columns(idx));
    m(it->row, it->col) = 1;
    const Rational slope = det(m.select_columns(idx)) - at0;
    if (slope != 0) {
      m(it->row, it->col) = -at0 / slope;
      return;
    }
    m(it->row, it->col) = saved;
  }
}

unsigned thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("FANMODULI_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

}  // namespace

std::vector<Stratum> strata_scan(const CombinatorialType& type, const Calibration& h0,
                                 const ScanOptions& options) {
  const std::size_t d = h0.d();
  const std::size_t n = h0.n();
  const Subset chart = options.chart.empty() ? standard_chart(d) : options.chart;
  const SignVector base = det_signs(h0, type);
  const auto cones = type.maximal_cones();

  RationalMatrix frame(d, n);
  std::vector<Coordinate> coords;
  for (std::size_t k = 0; k < chart.size(); ++k) {
    if (chart[k] < 1 || static_cast<std::size_t>(chart[k]) > n)
      throw DimensionError("chart index outside [1, n]");
    frame(k, static_cast<std::size_t>(chart[k] - 1)) = 1;
  }
  if (chart.size() != d) throw DimensionError("chart must have d elements");
  for (std::size_t c = 0; c < n; ++c)
    if (!std::binary_search(chart.begin(), chart.end(), static_cast<int>(c + 1)))
      for (std::size_t r = 0; r < d; ++r) coords.push_back({r, c});

  Rng rng(options.seed);
  std::vector<RationalMatrix> points;
  points.reserve(options.samples);
  for (std::size_t s = 0; s < options.samples; ++s) {
    RationalMatrix m = frame;
    const std::size_t mode = s % 4;
    for (const auto& x : coords) {
      switch (mode) {
        case 0: m(x.row, x.col) = jittered(rng); break;
        case 1: m(x.row, x.col) = Rational(rng.integer(-2, 2)); break;
        default: m(x.row, x.col) = rng.coin() ? sparse(rng) : jittered(rng); break;
      }
    }
    if (mode == 3 && !cones.empty()) {
      const long count = rng.integer(1, static_cast<long>(cones.size()));
      for (long t = 0; t < count; ++t) {
        const auto& cone = cones[static_cast<std::size_t>(rng.integer(0, static_cast<long>(cones.size()) - 1))];
        solve_zero(m, cone, coords);
      }
    }
    points.push_back(std::move(m));
  }

  // Sign vector of each point, or nullopt outside the closure.
  std::vector<std::optional<SignVector>> signs(points.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t s = begin; s < end; ++s) {
      try {
        signs[s] = relative_signs(Calibration(points[s], chart), type, base);
      } catch (const PreconditionError&) {
      }
    }
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(thread_count(options.threads),
                                                           static_cast<unsigned>(points.size() / 64 + 1)));
  if (threads == 1) {
    work(0, points.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (points.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t b = std::min(points.size(), t * chunk);
      pool.emplace_back(work, b, std::min(points.size(), b + chunk));
    }
    for (auto& th : pool) th.join();
  }

  std::map<std::vector<int>, std::size_t> first;
  for (std::size_t s = 0; s < points.size(); ++s) {
    if (!signs[s]) continue;
    std::vector<int> key;
    for (const auto& kv : *signs[s]) key.push_back(kv.second);
    first.emplace(key, s);
  }
  std::vector<Stratum> out;
  for (const auto& [key, s] : first) {
    Calibration witness(points[s], chart);
    out.push_back(Stratum{*signs[s], degenerate_type(witness, type), witness});
  }
  return out;
}

}  // namespace fanmoduli
