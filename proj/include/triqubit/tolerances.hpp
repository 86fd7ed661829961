#pragma once

namespace triqubit::tol {

// Relative tolerance accepted on the norm of a state read from a file.
inline constexpr double kNorm = 1e-10;

// Magnitude below which a whole amplitude vector counts as zero.
inline constexpr double kZeroAmplitude = 1e-14;

// Unitarity check on 2x2 matrices, max |u^dag u - 1|.
inline constexpr double kUnitary = 1e-12;

// A canonical-form coefficient below this is treated as exactly zero when
// absorbing phases.
inline constexpr double kDegenerateLambda = 1e-12;

// |sin(phi)| below this puts the canonical phase on the {0, pi} boundary,
// where the tie-break between the two pencil candidates applies.
inline constexpr double kPhaseBoundary = 1e-9;

// Absolute threshold for "this invariant is zero" antecedents.
inline constexpr double kEpsZero = 1e-9;

// Tolerance on identity consequents; looser than kEpsZero because square
// roots halve the significant digits.
inline constexpr double kImplication = 1e-6;

// Default classification epsilon on Table-condition residuals.
inline constexpr double kClassify = 1e-8;

// The symmetric form requires |t110|, |t101|, |t011| below this.
inline constexpr double kSymmetricResidual = 1e-8;

// Coefficients below this are dropped when counting terms of a minimal
// decomposition.
inline constexpr double kTermLeak = 1e-7;

// Pencil coefficients all below this make the pencil identically singular.
inline constexpr double kSingularPencil = 1e-12;

// Convergence threshold on the overlap change of the alternating
// rank-1 optimizer.
inline constexpr double kOverlapChange = 1e-12;

}  // namespace triqubit::tol
