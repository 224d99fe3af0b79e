#include "bicoarse/audit.hpp"

#include <cmath>

#include "bicoarse/cancel.hpp"

namespace bicoarse {

MeteredMagma<ReducedWord, std::size_t> f2_cancel_magma(std::size_t radius, const Alphabet& alphabet) {
  MeteredMagma<ReducedWord, std::size_t> m;
  m.descriptor = "F_" + std::to_string(alphabet.rank()) + " reduced ball radius " + std::to_string(radius) +
                 ", cancellation metric";
  m.sample = ball(alphabet, radius);
  m.op = [](const ReducedWord& u, const ReducedWord& v) { return multiply(u, v); };
  m.inv = [](const ReducedWord& u) { return invert(u); };
  m.unit = ReducedWord{};
  m.metric = [](const ReducedWord& u, const ReducedWord& v) { return cancellation_distance(u, v); };
  return m;
}

MeteredMagma<std::int64_t, std::int64_t> perturbed_z_magma(std::int64_t n) {
  MeteredMagma<std::int64_t, std::int64_t> m;
  m.descriptor = "Z on [-" + std::to_string(n) + ", " + std::to_string(n) + "], x*y = x+y+1, |x-y|";
  for (std::int64_t x = -n; x <= n; ++x) m.sample.push_back(x);
  m.op = [](std::int64_t x, std::int64_t y) { return x + y + 1; };
  m.inv = [](std::int64_t x) { return -x; };
  m.unit = 0;
  m.metric = [](std::int64_t x, std::int64_t y) { return x > y ? x - y : y - x; };
  return m;
}

MeteredMagma<Z2, double> z2_euclid_magma(std::int64_t n) {
  MeteredMagma<Z2, double> m;
  m.descriptor = "Z^2 on [-" + std::to_string(n) + ", " + std::to_string(n) + "]^2, Euclidean";
  for (std::int64_t x = -n; x <= n; ++x) {
    for (std::int64_t y = -n; y <= n; ++y) m.sample.push_back({x, y});
  }
  m.op = [](const Z2& u, const Z2& v) { return Z2{u.x + v.x, u.y + v.y}; };
  m.inv = [](const Z2& u) { return Z2{-u.x, -u.y}; };
  m.unit = Z2{};
  m.metric = [](const Z2& u, const Z2& v) {
    return std::hypot(static_cast<double>(u.x - v.x), static_cast<double>(u.y - v.y));
  };
  return m;
}

std::vector<AbelianGrowthEntry> abelian_growth(long n_max, int x, int y) {
  if (n_max < 1 || n_max > 12) throw Error(ErrorKind::InvalidInput, "abelian growth supports 1 <= n_max <= 12");
  const ReducedWord gx = ReducedWord::from_reduced({Letter(x, 1)});
  const ReducedWord gy = ReducedWord::from_reduced({Letter(y, 1)});
  std::vector<AbelianGrowthEntry> out;
  for (long n = 1; n <= n_max; ++n) {
    const ReducedWord xn = power(gx, n);
    const ReducedWord yn = power(gy, n);
    // d(x^n y^n, y^n x^n) = |[x^n, y^n]|_x by bi-invariance.
    out.push_back({n, cancellation_distance(multiply(xn, yn), multiply(yn, xn))});
  }
  return out;
}

}  // namespace bicoarse
