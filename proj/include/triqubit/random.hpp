#pragma once

#include <cstdint>
#include <random>

#include "triqubit/state.hpp"

namespace triqubit {

/// Deterministic generator; every sampling entry point takes one of these
/// (or a bare seed) so callers control reproducibility.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::mt19937_64& engine() { return engine_; }

  /// Standard complex Gaussian (real and imaginary parts N(0, 1)).
  cd gaussian();

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Stateless per-index sub-seed (splitmix64 of seed + index), so ensemble
/// sample i is independent of how samples 0..i-1 were consumed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// Uniform state on the unit sphere of C^8: 8 i.i.d. complex Gaussians,
/// normalized.
PureState3 haar_random_state3(Rng& rng);
PureState3 haar_random_state3(std::uint64_t seed);

PureState4 haar_random_state4(Rng& rng);
PureState4 haar_random_state4(std::uint64_t seed);

/// Haar-distributed U(2) element: QR of a complex Gaussian matrix with the
/// diagonal of R phase-fixed positive.
LocalUnitary haar_random_unitary(Rng& rng);
LocalUnitary haar_random_unitary(std::uint64_t seed);

/// Random product vector (each factor uniform on the Bloch sphere).
Vector2cd haar_random_qubit(Rng& rng);

}  // namespace triqubit
