#pragma once

#include <Eigen/Core>
#include <complex>
#include <vector>

#include "triqubit/state.hpp"

namespace triqubit {

/// Closed-form SVD of a 2x2 complex matrix: U.adjoint() * T * V is
/// diagonal with the larger singular value in the (0,0) slot and real
/// non-negative diagonal.
struct Svd2 {
  Matrix2cd U;
  Matrix2cd V;
  double s0 = 0.0;
  double s1 = 0.0;
};

Svd2 svd2(const Matrix2cd& t);

/// Real SVD with orthogonal factors: U.transpose() * T * V = diag(s0, s1),
/// s0 >= s1 >= 0.
struct Svd2Real {
  Eigen::Matrix2d U;
  Eigen::Matrix2d V;
  double s0 = 0.0;
  double s1 = 0.0;
};

Svd2Real svd2_real(const Eigen::Matrix2d& t);

/// Point of the complex projective line, stored as a unit pair with the
/// larger component phase-fixed real positive.
struct HomogeneousRoot {
  cd u0;
  cd u1;

  bool is_infinite() const { return std::abs(u0) < 1e-300; }
  /// u1/u0; +inf magnitude when u0 = 0.
  cd ratio() const { return u1 / u0; }
};

HomogeneousRoot make_homogeneous(cd u0, cd u1);

/// Roots of the homogeneous quadratic c0 u0^2 + c1 u0 u1 + c2 u1^2 on the
/// projective line (so x = u1/u0 may be infinite).
struct QuadraticRoots {
  enum class Kind { Distinct, Double, IdenticallySingular };
  std::vector<HomogeneousRoot> roots;  // 2 when distinct, else 1
  Kind kind = Kind::Distinct;
};

QuadraticRoots quadratic_homogeneous_roots(cd c0, cd c1, cd c2);

/// Roots of sum_m c[m] x^m via the companion matrix. Leading coefficients
/// below lead_tol_rel * max|c| are treated as zero; each dropped degree
/// contributes one root at infinity.
struct PolyRoots {
  std::vector<cd> finite;
  int at_infinity = 0;
  bool identically_zero = false;
};

PolyRoots poly_roots(const std::vector<cd>& coeffs, double lead_tol_rel);

}  // namespace triqubit
