#include "triqubit/random.hpp"

#include <cmath>

namespace triqubit {

cd Rng::gaussian() {
  const double re = normal_(engine_);
  const double im = normal_(engine_);
  return {re, im};
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 finalizer over base + golden-ratio-stepped index.
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

PureState3 haar_random_state3(Rng& rng) {
  std::array<cd, 8> t;
  for (auto& a : t) a = rng.gaussian();
  return PureState3::normalized(t);
}

PureState3 haar_random_state3(std::uint64_t seed) {
  Rng rng(seed);
  return haar_random_state3(rng);
}

PureState4 haar_random_state4(Rng& rng) {
  std::array<cd, 16> t;
  for (auto& a : t) a = rng.gaussian();
  return PureState4::normalized(t);
}

PureState4 haar_random_state4(std::uint64_t seed) {
  Rng rng(seed);
  return haar_random_state4(rng);
}

LocalUnitary haar_random_unitary(Rng& rng) {
  // Gram-Schmidt QR of a 2x2 Gaussian matrix; multiplying each column by
  // the phase that makes R's diagonal positive yields the Haar measure.
  Vector2cd g0(rng.gaussian(), rng.gaussian());
  Vector2cd g1(rng.gaussian(), rng.gaussian());
  const double r00 = g0.norm();
  Vector2cd q0 = g0 / r00;
  const cd r01 = q0.dot(g1);
  Vector2cd w = g1 - r01 * q0;
  const double r11 = w.norm();
  Vector2cd q1 = w / r11;
  Matrix2cd u;
  u.col(0) = q0;
  u.col(1) = q1;
  return LocalUnitary(u);
}

LocalUnitary haar_random_unitary(std::uint64_t seed) {
  Rng rng(seed);
  return haar_random_unitary(rng);
}

Vector2cd haar_random_qubit(Rng& rng) {
  Vector2cd v(rng.gaussian(), rng.gaussian());
  return v / v.norm();
}

}  // namespace triqubit
