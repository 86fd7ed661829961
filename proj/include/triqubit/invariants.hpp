#pragma once

#include <array>
#include <string>
#include <vector>

#include "triqubit/canonical.hpp"
#include "triqubit/state.hpp"

namespace triqubit {

/// Cayley hyperdeterminant of a 2x2x2 coefficient tensor (degree 4);
/// |Hdet|^2 = I5 and 4|Hdet| is the three-tangle.
cd hyperdeterminant(std::span<const cd, 8> t);
cd hyperdeterminant(const PureState3& state);

/// I1 = tr rho_A^2, I2 = tr rho_B^2, I3 = tr rho_C^2,
/// I4 = tr((rho_A x rho_B) rho_AB), I5 = |Hdet|^2.
std::array<double, 5> compute_I(const PureState3& state);

/// J-invariants from the I set:
///   J1 = (1 + I1 - I2 - I3 - 2 sqrt(I5)) / 4   (and cyclic for J2, J3)
///   J4 = sqrt(I5)
///   J5 = (3 - 3 I1 - 3 I2 - I3 + 4 I4 - 2 sqrt(I5)) / 4
/// Throws RangeViolationError when the inputs leave their admissible
/// ranges by more than 1e-9.
std::array<double, 5> compute_J(const std::array<double, 5>& I);

/// Same invariants read off the canonical form:
///   J1 = |l1 l4 e^{i phi} - l2 l3|^2, J2 = mu0 mu2, J3 = mu0 mu3,
///   J4 = mu0 mu4, J5 = mu0 (J1 + mu2 mu3 - mu1 mu4).
std::array<double, 5> J_from_canonical(const CanonicalForm& cf);

/// Discriminant (J4+J5)^2 - 4 (J1+J4)(J2+J4)(J3+J4); non-negative for
/// every state.
double delta_J(const std::array<double, 5>& J);

/// Grassl's degree-12 complex invariant evaluated on the canonical form:
///   I6 = mu0^2 mu4 (l4 (1 - 2(mu0 + mu1)) + 2 l1 l2 l3 e^{-i phi})^2.
/// The sign of Im(I6) separates a state's orbit from its conjugate's.
cd grassl_I6(const CanonicalForm& cf);

/// Canonical parameters recovered from the invariants, Eq.-(22)-style:
/// mu0 = (J4 + J5 +- sqrt(Delta_J)) / (2 (J1 + J4)), etc.
struct RecoveredParameters {
  struct Branch {
    std::array<double, 5> mu{};
    double cos_phi = 1.0;
  };
  Branch plus;
  Branch minus;
  /// Branch whose recomputed I6 matches the observed one.
  Branch selected;
  enum class Reason { I6Sign, Coincident } reason = Reason::I6Sign;
  /// Set when J1 + J4 (or a recovered mu0) vanishes and the formulas
  /// degenerate; fall back to direct canonicalization in that case.
  bool degenerate_denominator = false;
};

RecoveredParameters recover_parameters(const std::array<double, 5>& J, cd I6);

/// Ledger of the bound and implication identities on the J set.
struct IdentityReport {
  struct Entry {
    std::string name;
    bool applicable = true;  // implications only fire when the antecedent holds
    bool pass = true;
    double residual = 0.0;
  };
  std::vector<Entry> entries;

  int violations() const;
  bool all_pass() const { return violations() == 0; }
};

IdentityReport check_identities(const std::array<double, 5>& J, double deltaJ);

/// Everything above bundled for reporting.
struct InvariantSet {
  std::array<double, 5> I{};
  cd I6;
  std::array<double, 5> J{};
  double deltaJ = 0.0;
  bool ranges_ok = true;
  /// Im(I6) is numerically zero yet neither reality condition holds; the
  /// conjugation ambiguity is then undecided.
  bool conjugation_ambiguous = false;
};

InvariantSet invariant_set(const PureState3& state);

}  // namespace triqubit
