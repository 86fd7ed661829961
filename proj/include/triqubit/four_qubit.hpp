#pragma once

#include <array>
#include <vector>

#include "triqubit/linalg2.hpp"
#include "triqubit/state.hpp"

namespace triqubit {

/// Local transformation record for four parties (phases folded into the
/// unitaries).
struct Gauge4 {
  LocalUnitary uA = LocalUnitary::identity();
  LocalUnitary uB = LocalUnitary::identity();
  LocalUnitary uC = LocalUnitary::identity();
  LocalUnitary uD = LocalUnitary::identity();

  PureState4 apply(const PureState4& source) const;
  PureState4 apply_inverse(const PureState4& form) const;
};

/// Roots of Hdet(u0 T0 + u1 T1) = 0, a homogeneous quartic on the
/// projective line; (T_i)_jkl = t_ijkl are the two three-qubit slices.
struct QuarticPencilRoots {
  std::vector<HomogeneousRoot> roots;  // 4 counting multiplicity, 1 if zero
  bool identically_zero = false;
  std::array<cd, 5> coefficients{};  // ascending in x = u1/u0
};

QuarticPencilRoots hdet_pencil_roots4(const PureState4& state);

/// |Hdet| of the combination u0 T0 + u1 T1 (diagnostic for root quality).
double quartic_pencil_residual(const PureState4& state,
                               const HomogeneousRoot& root);

/// The sixteen basis indices of the twelve-term set, in row order
/// {0000, 0100, 0101, 0110}, {1000..1011}, {1100..1111}; the four excluded
/// indices are 0001, 0010, 0011, 0111.
const std::array<int, 12>& twelve_set_indices();
const std::array<int, 4>& excluded_indices4();

/// Twelve-term form of a four-qubit state: the selected pencil root zeroes
/// the slice hyperdeterminant, the first slice then canonicalizes to the
/// type-4a pattern, and one block phase realifies the first surviving
/// coefficient of the second slice; N + 1 = 5 coefficients end up real.
struct TwelveTermForm {
  std::array<cd, 12> coefficients{};  // in twelve_set_indices() order
  Gauge4 gauge;
  int root_index = 0;
  std::vector<int> real_slots;      // 16-array indices gauge-fixed real
  double excluded_residual = 0.0;   // max |t| over the four excluded slots

  PureState4 pattern_state() const;
  PureState4 reconstruct() const;
};

/// Reduces with the deterministic root choice (smallest |x|, infinity
/// last, ties by argument) or an explicit root index into
/// hdet_pencil_roots4().roots.
TwelveTermForm reduce_to_twelve(const PureState4& state, int root_index = -1);

/// One form per pencil root.
std::vector<TwelveTermForm> reduce_all_roots(const PureState4& state);

}  // namespace triqubit
