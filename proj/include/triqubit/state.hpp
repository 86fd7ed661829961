#pragma once

#include <Eigen/Core>
#include <array>
#include <complex>
#include <span>

#include "triqubit/errors.hpp"
#include "triqubit/tolerances.hpp"

namespace triqubit {

using cd = std::complex<double>;
using Eigen::Matrix2cd;
using Eigen::Matrix4cd;
using Eigen::Vector2cd;

/// Pure state of three qubits. Amplitudes t_ijk are stored in lexicographic
/// order of (i, j, k), i.e. t000, t001, ..., t111, and are kept normalized.
class PureState3 {
 public:
  PureState3() : t_{} { t_[0] = 1.0; }

  /// Rescales the input to unit norm. Throws ZeroStateError when every
  /// amplitude is below tol::kZeroAmplitude in magnitude.
  static PureState3 normalized(std::span<const cd, 8> raw);
  static PureState3 normalized(const std::array<cd, 8>& raw) {
    return normalized(std::span<const cd, 8>(raw));
  }

  /// Accepts components that are already normalized up to small rounding
  /// (relative norm error below 1e-6) and rescales them exactly.
  static PureState3 from_components(std::span<const cd, 8> raw);
  static PureState3 from_components(const std::array<cd, 8>& raw) {
    return from_components(std::span<const cd, 8>(raw));
  }

  const std::array<cd, 8>& amps() const { return t_; }
  cd amp(int i, int j, int k) const { return t_[4 * i + 2 * j + k]; }
  cd operator[](int idx) const { return t_[idx]; }

  PureState3 conjugated() const;

  /// |<a|b>|, the fidelity between two unit vectors.
  double fidelity(const PureState3& other) const;

 private:
  explicit PureState3(const std::array<cd, 8>& t) : t_(t) {}
  std::array<cd, 8> t_;
};

/// Pure state of four qubits, amplitudes t_ijkl in lexicographic order.
class PureState4 {
 public:
  PureState4() : t_{} { t_[0] = 1.0; }

  static PureState4 normalized(std::span<const cd, 16> raw);
  static PureState4 normalized(const std::array<cd, 16>& raw) {
    return normalized(std::span<const cd, 16>(raw));
  }
  static PureState4 from_components(std::span<const cd, 16> raw);
  static PureState4 from_components(const std::array<cd, 16>& raw) {
    return from_components(std::span<const cd, 16>(raw));
  }

  const std::array<cd, 16>& amps() const { return t_; }
  cd amp(int i, int j, int k, int l) const {
    return t_[8 * i + 4 * j + 2 * k + l];
  }
  cd operator[](int idx) const { return t_[idx]; }

  double fidelity(const PureState4& other) const;

 private:
  explicit PureState4(const std::array<cd, 16>& t) : t_(t) {}
  std::array<cd, 16> t_;
};

/// The two 2x2 slices (T_i)_jk = t_ijk of a three-qubit state.
struct MatrixSlicePair {
  Matrix2cd T0;
  Matrix2cd T1;
};

MatrixSlicePair slice(const PureState3& state);

/// Inverse of slice(); exact, no renormalization.
PureState3 reassemble(const MatrixSlicePair& slices);

/// One party's 2x2 basis change, checked for unitarity on construction.
class LocalUnitary {
 public:
  explicit LocalUnitary(const Matrix2cd& u);

  static LocalUnitary identity() { return LocalUnitary(Matrix2cd::Identity()); }
  /// diag(e^{i a0}, e^{i a1})
  static LocalUnitary phase_diag(double a0, double a1);

  const Matrix2cd& matrix() const { return u_; }
  LocalUnitary adjoint() const { return LocalUnitary(Matrix2cd(u_.adjoint())); }
  LocalUnitary operator*(const LocalUnitary& rhs) const {
    return LocalUnitary(Matrix2cd(u_ * rhs.u_));
  }

 private:
  Matrix2cd u_;
};

/// max |u^dag u - 1|
double unitarity_defect(const Matrix2cd& u);

/// t'_ijk = sum_abc uA_ia uB_jb uC_kc t_abc. Throws NonUnitaryError if a
/// factor fails the unitarity check.
PureState3 apply_local(const PureState3& state, const Matrix2cd& uA,
                       const Matrix2cd& uB, const Matrix2cd& uC);
PureState3 apply_local(const PureState3& state, const LocalUnitary& uA,
                       const LocalUnitary& uB, const LocalUnitary& uC);

/// Record of the local transformation that carried a state into one of its
/// decomposed forms: state_form = phases . (uA x uB x uC) state_source.
/// The four phase angles act as diag(e^{i p0}, e^{i p1}) on party A and
/// diag(1, e^{i p2}), diag(1, e^{i p3}) on parties B and C.
struct GaugeRecord {
  LocalUnitary uA = LocalUnitary::identity();
  LocalUnitary uB = LocalUnitary::identity();
  LocalUnitary uC = LocalUnitary::identity();
  std::array<double, 4> phases{0.0, 0.0, 0.0, 0.0};

  Matrix2cd totalA() const;
  Matrix2cd totalB() const;
  Matrix2cd totalC() const;

  PureState3 apply(const PureState3& source) const;
  PureState3 apply_inverse(const PureState3& form) const;

  /// Gauge equivalent to applying *this after `first`; phases are folded
  /// into the unitaries of the result.
  GaugeRecord after(const GaugeRecord& first) const;
};

enum class PartySubset { A, B, C, AB };

/// Reduced density matrix of a normalized pure state: 2x2 for single
/// parties, 4x4 for AB in the lexicographic |i_A j_B> basis.
struct ReducedDensity {
  Eigen::MatrixXcd rho;
  PartySubset which;
};

ReducedDensity reduced(const PureState3& state, PartySubset which);

/// Sorted (ascending) eigenvalues of a 2x2 Hermitian matrix.
std::array<double, 2> hermitian2_eigenvalues(const Matrix2cd& h);

/// Relabels the parties: slot m of the result reads old party perm[m],
/// e.g. perm = {1, 0, 2} swaps A and B.
PureState3 permute_parties(const PureState3& state,
                           const std::array<int, 3>& perm);

/// Four-party analogue of apply_local.
PureState4 apply_local4(const PureState4& state, const Matrix2cd& uA,
                        const Matrix2cd& uB, const Matrix2cd& uC,
                        const Matrix2cd& uD);

}  // namespace triqubit
