#include "triqubit/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace triqubit {

cd hyperdeterminant(std::span<const cd, 8> t) {
  const cd t000 = t[0], t001 = t[1], t010 = t[2], t011 = t[3];
  const cd t100 = t[4], t101 = t[5], t110 = t[6], t111 = t[7];
  const cd squares = t000 * t000 * t111 * t111 + t001 * t001 * t110 * t110 +
                     t010 * t010 * t101 * t101 + t011 * t011 * t100 * t100;
  const cd cross = t000 * t001 * t110 * t111 + t000 * t010 * t101 * t111 +
                   t000 * t011 * t100 * t111 + t001 * t010 * t101 * t110 +
                   t001 * t011 * t110 * t100 + t010 * t011 * t101 * t100;
  const cd quads = t000 * t011 * t101 * t110 + t001 * t010 * t100 * t111;
  return squares - 2.0 * cross + 4.0 * quads;
}

cd hyperdeterminant(const PureState3& state) {
  return hyperdeterminant(std::span<const cd, 8>(state.amps()));
}

std::array<double, 5> compute_I(const PureState3& state) {
  const Matrix2cd rhoA = reduced(state, PartySubset::A).rho;
  const Matrix2cd rhoB = reduced(state, PartySubset::B).rho;
  const Matrix4cd rhoAB = reduced(state, PartySubset::AB).rho;
  const Matrix2cd rhoC = reduced(state, PartySubset::C).rho;

  Matrix4cd kron = Matrix4cd::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int ip = 0; ip < 2; ++ip) {
        for (int jp = 0; jp < 2; ++jp) {
          kron(2 * i + j, 2 * ip + jp) = rhoA(i, ip) * rhoB(j, jp);
        }
      }
    }
  }

  return {
      std::real((rhoA * rhoA).trace()),
      std::real((rhoB * rhoB).trace()),
      std::real((rhoC * rhoC).trace()),
      std::real((kron * rhoAB).trace()),
      std::norm(hyperdeterminant(state)),
  };
}

std::array<double, 5> compute_J(const std::array<double, 5>& I) {
  const double rtol = tol::kEpsZero;
  const auto in_range = [rtol](double x, double lo, double hi) {
    return x >= lo - rtol && x <= hi + rtol;
  };
  if (!in_range(I[0], 0.5, 1.0) || !in_range(I[1], 0.5, 1.0) ||
      !in_range(I[2], 0.5, 1.0) || !in_range(I[3], 0.25, 1.0) ||
      !in_range(I[4], 0.0, 1.0 / 16.0)) {
    throw RangeViolationError("I invariants outside their admissible ranges");
  }
  const double r5 = 2.0 * std::sqrt(std::max(I[4], 0.0));
  return {
      (1.0 + I[0] - I[1] - I[2] - r5) / 4.0,
      (1.0 - I[0] + I[1] - I[2] - r5) / 4.0,
      (1.0 - I[0] - I[1] + I[2] - r5) / 4.0,
      r5 / 2.0,
      (3.0 - 3.0 * I[0] - 3.0 * I[1] - I[2] + 4.0 * I[3] - r5) / 4.0,
  };
}

std::array<double, 5> J_from_canonical(const CanonicalForm& cf) {
  const double m0 = cf.mu(0), m1 = cf.mu(1), m2 = cf.mu(2), m3 = cf.mu(3),
               m4 = cf.mu(4);
  const cd k = cf.lambda[1] * cf.lambda[4] * std::polar(1.0, cf.phi) -
               cf.lambda[2] * cf.lambda[3];
  const double j1 = std::norm(k);
  return {j1, m0 * m2, m0 * m3, m0 * m4, m0 * (j1 + m2 * m3 - m1 * m4)};
}

double delta_J(const std::array<double, 5>& J) {
  return (J[3] + J[4]) * (J[3] + J[4]) -
         4.0 * (J[0] + J[3]) * (J[1] + J[3]) * (J[2] + J[3]);
}

cd grassl_I6(const CanonicalForm& cf) {
  const double m0 = cf.mu(0), m1 = cf.mu(1), m4 = cf.mu(4);
  const cd inner = cf.lambda[4] * (1.0 - 2.0 * (m0 + m1)) +
                   2.0 * cf.lambda[1] * cf.lambda[2] * cf.lambda[3] *
                       std::polar(1.0, -cf.phi);
  return m0 * m0 * m4 * inner * inner;
}

namespace {

// I6 recomputed from recovered (mu, cos phi) with sin phi >= 0, the phase
// range the canonical form allows.
cd i6_from_branch(const RecoveredParameters::Branch& b) {
  CanonicalForm cf;
  for (int i = 0; i < 5; ++i) cf.lambda[i] = std::sqrt(std::max(b.mu[i], 0.0));
  cf.phi = std::acos(std::clamp(b.cos_phi, -1.0, 1.0));
  return grassl_I6(cf);
}

RecoveredParameters::Branch make_branch(const std::array<double, 5>& J,
                                        double mu0) {
  RecoveredParameters::Branch b;
  b.mu[0] = mu0;
  if (mu0 > tol::kEpsZero) {
    b.mu[2] = J[1] / mu0;
    b.mu[3] = J[2] / mu0;
    b.mu[4] = J[3] / mu0;
    b.mu[1] = 1.0 - mu0 - (J[1] + J[2] + J[3]) / mu0;
  } else {
    // Degenerate: J2 = J3 = J4 = 0 is forced, the residual weight sits on
    // mu1.
    b.mu[1] = 1.0 - mu0;
  }
  const double denom = 2.0 *
                       std::sqrt(std::max(b.mu[1], 0.0) * std::max(b.mu[2], 0.0) *
                                 std::max(b.mu[3], 0.0) * std::max(b.mu[4], 0.0));
  if (denom > tol::kEpsZero) {
    b.cos_phi = std::clamp(
        (b.mu[1] * b.mu[4] + b.mu[2] * b.mu[3] - J[0]) / denom, -1.0, 1.0);
  } else {
    b.cos_phi = 1.0;  // phi = 0 convention when the phase is irrelevant
  }
  return b;
}

}  // namespace

RecoveredParameters recover_parameters(const std::array<double, 5>& J, cd I6) {
  RecoveredParameters out;
  const double dj = std::max(delta_J(J), 0.0);
  const double denom = 2.0 * (J[0] + J[3]);
  if (denom <= 2.0 * tol::kEpsZero) {
    out.degenerate_denominator = true;
    out.reason = RecoveredParameters::Reason::Coincident;
    return out;
  }
  const double root = std::sqrt(dj);
  out.plus = make_branch(J, (J[3] + J[4] + root) / denom);
  out.minus = make_branch(J, (J[3] + J[4] - root) / denom);
  if (out.plus.mu[0] <= tol::kEpsZero || out.minus.mu[0] <= tol::kEpsZero) {
    out.degenerate_denominator = true;
  }

  if (dj < tol::kEpsZero) {
    out.reason = RecoveredParameters::Reason::Coincident;
    out.selected = out.plus;
    return out;
  }
  // The true branch reproduces the observed I6 (in particular the sign of
  // its imaginary part); the other one reproduces its conjugate.
  const cd i6p = i6_from_branch(out.plus);
  const cd i6m = i6_from_branch(out.minus);
  out.reason = RecoveredParameters::Reason::I6Sign;
  out.selected = std::abs(i6p - I6) <= std::abs(i6m - I6) ? out.plus : out.minus;
  return out;
}

int IdentityReport::violations() const {
  int n = 0;
  for (const Entry& e : entries) {
    if (e.applicable && !e.pass) ++n;
  }
  return n;
}

IdentityReport check_identities(const std::array<double, 5>& J, double deltaJ) {
  IdentityReport rep;
  const double J1 = J[0], J2 = J[1], J3 = J[2], J4 = J[3], J5 = J[4];

  const auto bound = [&rep](const std::string& name, double value, double lo,
                            double hi) {
    const double residual =
        std::max({lo - value, value - hi, 0.0});
    rep.entries.push_back({name, true, residual <= tol::kEpsZero, residual});
  };
  bound("range_J1", J1, 0.0, 0.25);
  bound("range_J2", J2, 0.0, 0.25);
  bound("range_J3", J3, 0.0, 0.25);
  bound("range_J4", J4, 0.0, 0.25);
  bound("range_J5", J5, -1.0 / 108.0, 2.0 / 27.0);
  bound("bound_J2+J3+J4", J2 + J3 + J4, 0.0, 0.25);
  bound("bound_J1+J3+J4", J1 + J3 + J4, 0.0, 0.25);
  bound("bound_J1+J2+J4", J1 + J2 + J4, 0.0, 0.25);
  bound("bound_J4+J5", J4 + J5, 0.0, 0.25);
  bound("deltaJ_nonneg", deltaJ, 0.0, std::numeric_limits<double>::infinity());

  const auto implication = [&rep](const std::string& name, double antecedent,
                                  double consequent) {
    const bool fires = std::abs(antecedent) < tol::kEpsZero;
    const double residual = fires ? std::abs(consequent) : 0.0;
    rep.entries.push_back(
        {name, fires, !fires || residual <= tol::kImplication, residual});
  };
  implication("J1=0_implies_J5=0", J1, J5);
  implication("J2=0_implies_J5=0", J2, J5);
  implication("J3=0_implies_J5=0", J3, J5);
  implication("J4=0_implies_sqrt(J1J2J3)=J5/2", J4,
              std::sqrt(std::max(J1 * J2 * J3, 0.0)) - J5 / 2.0);
  implication("J4+J5=0_implies_J4=J5=0", J4 + J5,
              std::max(std::abs(J4), std::abs(J5)));
  return rep;
}

InvariantSet invariant_set(const PureState3& state) {
  InvariantSet s;
  s.I = compute_I(state);
  s.J = compute_J(s.I);
  s.deltaJ = delta_J(s.J);
  s.I6 = grassl_I6(acin_canonical(state));

  s.ranges_ok = true;
  const auto in = [](double x, double lo, double hi) {
    return x >= lo - tol::kEpsZero && x <= hi + tol::kEpsZero;
  };
  s.ranges_ok = in(s.I[0], 0.5, 1.0) && in(s.I[1], 0.5, 1.0) &&
                in(s.I[2], 0.5, 1.0) && in(s.I[3], 0.25, 1.0) &&
                in(s.I[4], 0.0, 1.0 / 16.0) && s.deltaJ >= -tol::kEpsZero;

  const double sqrtJ123 =
      std::sqrt(std::max(s.J[0] * s.J[1] * s.J[2], 0.0));
  const bool real_cond1 = std::abs(sqrtJ123 - std::abs(s.J[4]) / 2.0) < 1e-8;
  const bool real_cond2 = std::abs(s.deltaJ) < 1e-8;
  s.conjugation_ambiguous =
      std::abs(s.I6.imag()) < tol::kEpsZero && !real_cond1 && !real_cond2;
  return s;
}

}  // namespace triqubit
