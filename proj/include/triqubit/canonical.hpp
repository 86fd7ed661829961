#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "triqubit/decomposition.hpp"
#include "triqubit/linalg2.hpp"
#include "triqubit/state.hpp"

namespace triqubit {

/// Singular points of the slice pencil det(u0 T0 + u1 T1) = 0.
struct PencilRoots {
  std::vector<HomogeneousRoot> roots;  // 2 when distinct, else 1
  QuadraticRoots::Kind kind = QuadraticRoots::Kind::Distinct;
};

PencilRoots pencil_roots(const MatrixSlicePair& slices);

/// The five-term canonical form
///   lambda0|000> + lambda1 e^{i phi}|100> + lambda2|101>
///   + lambda3|110> + lambda4|111>,
/// lambda_i >= 0, phi in [0, pi], sum lambda_i^2 = 1, unique under the
/// smallest-lambda1 / smallest-lambda0 tie-break on the phase boundary.
struct CanonicalForm {
  std::array<double, 5> lambda{};
  double phi = 0.0;
  GaugeRecord gauge;

  // Diagnostics (not part of the form's identity).
  QuadraticRoots::Kind pencil_kind = QuadraticRoots::Kind::Distinct;
  bool phase_on_boundary = false;  // |sin phi| below tol::kPhaseBoundary
  bool tie_break_used = false;

  double mu(int i) const { return lambda[i] * lambda[i]; }

  /// The five-term amplitude pattern in the canonical basis.
  PureState3 pattern_state() const;
  /// Inverse gauge applied to the pattern: reproduces the source state.
  PureState3 reconstruct() const;
};

CanonicalForm acin_canonical(const PureState3& state);

/// Both root candidates before selection (one entry when the pencil is
/// degenerate). Candidate phases are reported in (-pi, pi]; negative
/// interior phases mark the candidate that the range restriction discards.
std::vector<CanonicalForm> acin_candidates(const PureState3& state);

/// Weakly asymmetric form on {|000>,|001>,|100>,|110>,|111>}:
///   eta0 e^{i phi}|000> + eta1|001> + eta2|100> + eta3|110> + eta4|111>.
struct WeakAsymmetricForm {
  std::array<double, 5> eta{};
  double phi = 0.0;
  GaugeRecord gauge;
  /// Set when lambda1 = lambda2 = 0 and the defining rotation of the third
  /// qubit is undefined; the form is then the trivial embedding.
  bool degenerate_rotation = false;

  PureState3 pattern_state() const;
  PureState3 reconstruct() const;
};

WeakAsymmetricForm weak_asymmetric(const CanonicalForm& cf);

/// Best product approximation, found by alternating contractions.
struct ClosestProduct {
  Vector2cd a;
  Vector2cd b;
  Vector2cd c;
  double overlap = 0.0;  // |<Psi|abc>|^2 at the best point found
  bool converged = false;
  int best_restart = -1;
};

struct ClosestProductOptions {
  int restarts = 20;
  int max_iters = 500;
  std::uint64_t seed = 0x1b873593u;
  double tolerance = 1e-12;  // on the overlap change between sweeps
};

ClosestProduct closest_product_state(const PureState3& state,
                                     const ClosestProductOptions& opts = {});

/// Symmetric form on {|000>,|001>,|010>,|100>,|111>}:
///   kappa0 e^{i theta}|000> + kappa1|001> + kappa2|010> + kappa3|100>
///   + kappa4|111>,
/// built by rotating the maximizing product state onto |111>. The three
/// coefficients t110, t101, t011 must vanish there; `residual` records the
/// largest of their magnitudes.
struct SymmetricForm {
  std::array<double, 5> kappa{};
  double theta = 0.0;  // in [0, pi)
  GaugeRecord gauge;
  double residual = 0.0;

  PureState3 pattern_state() const;
  PureState3 reconstruct() const;
};

SymmetricForm symmetric_form(const PureState3& state,
                             const ClosestProductOptions& opts = {});

/// Two-term form alpha|000> + beta e^{i delta}|phi1 phi2 phi3> with
/// |phi_i> = (cos gamma_i, sin gamma_i), gamma_i in [0, pi/2]. Exists iff
/// J4 > 0 (GHZ class).
struct GhzDecomposition {
  double alpha = 0.0;
  double beta = 0.0;
  double delta = 0.0;  // in (-pi, pi]
  std::array<double, 3> gamma{};
  GaugeRecord gauge;

  PureState3 pattern_state() const;
  PureState3 reconstruct() const;
  ProductDecomposition decomposition() const;
};

GhzDecomposition ghz_two_term(const PureState3& state);

/// Generic round-trip: inverse gauge of the form's pattern.
PureState3 reconstruct(const CanonicalForm& form);
PureState3 reconstruct(const WeakAsymmetricForm& form);
PureState3 reconstruct(const SymmetricForm& form);
PureState3 reconstruct(const GhzDecomposition& form);

}  // namespace triqubit
