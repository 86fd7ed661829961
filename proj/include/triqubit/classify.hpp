#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "triqubit/canonical.hpp"
#include "triqubit/decomposition.hpp"
#include "triqubit/invariants.hpp"
#include "triqubit/state.hpp"

namespace triqubit {

enum class Party { A, B, C };

char party_letter(Party p);

/// Minimal-LBPS classes. The digit is nu, the minimal number of product
/// states built from local bases that express the state.
enum class ClassTag { T1, T2a, T2b, T3a, T3b, T4a, T4b, T4c, T4d, Generic5 };

std::string class_tag_name(ClassTag tag);
int class_nu(ClassTag tag);

struct EntanglementClass {
  ClassTag tag = ClassTag::Generic5;
  int nu = 5;
  /// For the permutation-sensitive types (2a, 3b, 4b, 4c): the party of the
  /// J index that parameterizes the fired condition variant (A/B/C for
  /// J1/J2/J3).
  std::optional<Party> party;

  struct ConditionRecord {
    std::string name;
    double residual = 0.0;
    bool fired = false;
  };
  /// Every condition evaluated, in precedence order, with its residual.
  std::vector<ConditionRecord> conditions;

  /// Condition 4a lists both J4 = 0 and sqrt(J1 J2 J3) = J5/2 although the
  /// second follows from the first; set when they disagree numerically.
  bool condition_4a_disagreement = false;
};

/// Classifies by the J-invariant conditions, smallest nu first so each
/// state receives its minimal type. eps applies to every condition
/// residual.
EntanglementClass classify(const PureState3& state, double eps = tol::kClassify);

int nu(const PureState3& state, double eps = tol::kClassify);

/// Exactly nu product terms reconstructing the state with fidelity
/// 1 - 1e-8; throws ClassMismatchError when the construction leaks more
/// terms than the class admits.
ProductDecomposition minimal_decomposition(const PureState3& state,
                                           const EntanglementClass& cls);

/// Reality decision and construction. A state is real iff
/// sqrt(J1 J2 J3) = |J5|/2 or Delta_J = 0; in either case some product
/// basis gives it all-real coordinates.
struct RealBasisResult {
  bool is_real = false;
  enum class Witness { None, PhaseBoundary, DeltaJ } witness = Witness::None;
  GaugeRecord gauge;
  std::array<double, 8> real_amplitudes{};
  double max_imag = 0.0;  // residual of the construction
};

/// Decision part only; the gauge is left at identity.
RealBasisResult is_real(const PureState3& state, double eps = tol::kClassify);

/// Decision plus construction of the real-coordinate basis. Throws
/// NotRealError when neither condition holds; GhzFormRequiredError when the
/// Delta_J route is required but J4 vanishes and the phase route failed.
RealBasisResult real_basis(const PureState3& state, double eps = tol::kClassify);

/// Six real-coefficient terms on {|000>,|011>,|100>,|101>,|110>,|111>} in
/// the real basis (zero terms dropped). Requires is_real.
ProductDecomposition real_six_lbps(const PureState3& state,
                                   double eps = tol::kClassify);

/// Type-4d normal form l1|001> + l2|010> + l3|100> + l4|111> with real
/// non-negative l built through the two-term form and the half-angle basis
/// change; the local bases diagonalize all three single-party densities.
struct Type4dForm {
  std::array<double, 4> l{};
  GaugeRecord gauge;

  PureState3 pattern_state() const;
  PureState3 reconstruct() const;
};

Type4dForm type4d_form(const PureState3& state, double eps = tol::kClassify);

}  // namespace triqubit
