#include "triqubit/classify.hpp"

#include <algorithm>
#include <cmath>

namespace triqubit {

namespace {

struct JContext {
  std::array<double, 5> J{};
  double deltaJ = 0.0;
  double sqrtJ123 = 0.0;
  double elem2 = 0.0;  // J1 J2 + J1 J3 + J2 J3
};

JContext j_context(const PureState3& state) {
  JContext ctx;
  ctx.J = compute_J(compute_I(state));
  ctx.deltaJ = delta_J(ctx.J);
  ctx.sqrtJ123 = std::sqrt(std::max(ctx.J[0] * ctx.J[1] * ctx.J[2], 0.0));
  ctx.elem2 =
      ctx.J[0] * ctx.J[1] + ctx.J[0] * ctx.J[2] + ctx.J[1] * ctx.J[2];
  return ctx;
}

Party party_of_index(int i) {
  return i == 0 ? Party::A : (i == 1 ? Party::B : Party::C);
}

}  // namespace

char party_letter(Party p) {
  return p == Party::A ? 'A' : (p == Party::B ? 'B' : 'C');
}

std::string class_tag_name(ClassTag tag) {
  switch (tag) {
    case ClassTag::T1:
      return "1";
    case ClassTag::T2a:
      return "2a";
    case ClassTag::T2b:
      return "2b";
    case ClassTag::T3a:
      return "3a";
    case ClassTag::T3b:
      return "3b";
    case ClassTag::T4a:
      return "4a";
    case ClassTag::T4b:
      return "4b";
    case ClassTag::T4c:
      return "4c";
    case ClassTag::T4d:
      return "4d";
    case ClassTag::Generic5:
      return "5";
  }
  return "?";
}

int class_nu(ClassTag tag) {
  switch (tag) {
    case ClassTag::T1:
      return 1;
    case ClassTag::T2a:
    case ClassTag::T2b:
      return 2;
    case ClassTag::T3a:
    case ClassTag::T3b:
      return 3;
    case ClassTag::T4a:
    case ClassTag::T4b:
    case ClassTag::T4c:
    case ClassTag::T4d:
      return 4;
    case ClassTag::Generic5:
      return 5;
  }
  return 5;
}

EntanglementClass classify(const PureState3& state, double eps) {
  const JContext ctx = j_context(state);
  const double J1 = ctx.J[0], J2 = ctx.J[1], J3 = ctx.J[2], J4 = ctx.J[3],
               J5 = ctx.J[4];

  EntanglementClass out;
  bool decided = false;
  const auto condition = [&](const std::string& name, double residual,
                             ClassTag tag, std::optional<Party> party) {
    const bool fires = residual <= eps;
    out.conditions.push_back({name, residual, !decided && fires});
    if (!decided && fires) {
      out.tag = tag;
      out.nu = class_nu(tag);
      out.party = party;
      decided = true;
    }
  };

  // Type 1: all invariants vanish.
  condition("1",
            std::max({J1, J2, J3, J4, std::abs(J5)}), ClassTag::T1,
            std::nullopt);

  // Type 2a: all J vanish apart from J_i; party i is then unentangled.
  // Cross-checked by the purity of that party's marginal.
  for (int i = 0; i < 3; ++i) {
    std::array<double, 4> rest{};
    int n = 0;
    for (int m = 0; m < 3; ++m) {
      if (m != i) rest[n++] = std::abs(ctx.J[m]);
    }
    rest[2] = J4;
    rest[3] = std::abs(J5);
    double residual = *std::max_element(rest.begin(), rest.end());
    const auto purity = [&state, i]() {
      const PartySubset which = i == 0   ? PartySubset::A
                                : i == 1 ? PartySubset::B
                                         : PartySubset::C;
      const Matrix2cd rho = reduced(state, which).rho;
      return std::real((rho * rho).trace());
    };
    residual = std::max(residual, 1.0 - purity());
    condition(std::string("2a-") + party_letter(party_of_index(i)), residual,
              ClassTag::T2a, party_of_index(i));
  }

  // Type 2b: only J4 survives (GHZ-like).
  condition("2b", std::max({J1, J2, J3, std::abs(J5)}), ClassTag::T2b,
            std::nullopt);

  // Type 3a: J4 = 0 and J1J2 + J1J3 + J2J3 = sqrt(J1J2J3) = J5/2.
  condition("3a",
            std::max({J4, std::abs(ctx.elem2 - ctx.sqrtJ123),
                      std::abs(ctx.sqrtJ123 - J5 / 2.0)}),
            ClassTag::T3a, std::nullopt);

  // Type 3b: J_j = J_k = J5 = 0 for the pair complementary to the
  // surviving index.
  for (int i = 0; i < 3; ++i) {
    std::array<double, 3> zeroed{};
    int n = 0;
    for (int m = 0; m < 3; ++m) {
      if (m != i) zeroed[n++] = std::abs(ctx.J[m]);
    }
    zeroed[2] = std::abs(J5);
    condition(std::string("3b-") + party_letter(party_of_index(i)),
              *std::max_element(zeroed.begin(), zeroed.end()), ClassTag::T3b,
              party_of_index(i));
  }

  // Type 4a: J4 = 0 (the companion identity sqrt(J1J2J3) = J5/2 follows;
  // both are evaluated and any disagreement is reported).
  {
    const double companion = std::abs(ctx.sqrtJ123 - J5 / 2.0);
    const double residual = std::max(J4, companion);
    if ((J4 <= eps) != (companion <= eps)) out.condition_4a_disagreement = true;
    condition("4a", residual, ClassTag::T4a, std::nullopt);
  }

  // Type 4b: J_i = J5 = 0.
  for (int i = 0; i < 3; ++i) {
    condition(std::string("4b-") + party_letter(party_of_index(i)),
              std::max(std::abs(ctx.J[i]), std::abs(J5)), ClassTag::T4b,
              party_of_index(i));
  }

  // Type 4c: J_i J4 + J1J2 + J1J3 + J2J3 = sqrt(J1J2J3) = J5/2.
  for (int i = 0; i < 3; ++i) {
    const double p = ctx.elem2 + ctx.J[i] * J4;
    condition(std::string("4c-") + party_letter(party_of_index(i)),
              std::max(std::abs(p - ctx.sqrtJ123),
                       std::abs(ctx.sqrtJ123 - J5 / 2.0)),
              ClassTag::T4c, party_of_index(i));
  }

  // Type 4d: Delta_J = 0 together with the reality condition.
  condition("4d",
            std::max(std::abs(ctx.deltaJ),
                     std::abs(ctx.sqrtJ123 - std::abs(J5) / 2.0)),
            ClassTag::T4d, std::nullopt);

  if (!decided) {
    out.tag = ClassTag::Generic5;
    out.nu = 5;
    out.party = std::nullopt;
  }
  return out;
}

int nu(const PureState3& state, double eps) { return classify(state, eps).nu; }

namespace {

// Eigenvector of a 2x2 Hermitian matrix for its larger eigenvalue.
Vector2cd hermitian2_top_eigenvector(const Matrix2cd& h) {
  const double h00 = std::real(h(0, 0));
  const double h11 = std::real(h(1, 1));
  const cd h01 = h(0, 1);
  const double rad =
      std::sqrt((h00 - h11) * (h00 - h11) + 4.0 * std::norm(h01));
  const double eplus = (h00 + h11 + rad) / 2.0;
  const Vector2cd cand1(h01, cd(eplus - h00));
  const Vector2cd cand2(cd(eplus - h11), std::conj(h01));
  const double n1 = cand1.norm();
  const double n2 = cand2.norm();
  if (std::max(n1, n2) < 1e-18 * std::max(1.0, eplus)) {
    return Vector2cd(1.0, 0.0);
  }
  return n1 >= n2 ? Vector2cd(cand1 / n1) : Vector2cd(cand2 / n2);
}

// Reads the minimal terms off the canonical form computed with the given
// party in the singled-out role.
ProductDecomposition from_canonical_singled(const PureState3& state,
                                            Party singled) {
  std::array<int, 3> perm{0, 1, 2};
  if (singled == Party::B) perm = {1, 0, 2};
  if (singled == Party::C) perm = {2, 1, 0};
  const PureState3 permuted = permute_parties(state, perm);
  const CanonicalForm cf = acin_canonical(permuted);

  const Matrix2cd ia = cf.gauge.totalA().adjoint();
  const Matrix2cd ib = cf.gauge.totalB().adjoint();
  const Matrix2cd ic = cf.gauge.totalC().adjoint();

  const std::array<std::pair<int, cd>, 5> slots{
      std::pair<int, cd>{0, cf.lambda[0]},
      {4, cf.lambda[1] * std::polar(1.0, cf.phi)},
      {5, cf.lambda[2]},
      {6, cf.lambda[3]},
      {7, cf.lambda[4]}};

  ProductDecomposition d;
  for (const auto& [idx, coeff] : slots) {
    if (std::abs(coeff) <= tol::kTermLeak) continue;
    const std::array<Vector2cd, 3> slot_vec{ia.col((idx >> 2) & 1),
                                            ib.col((idx >> 1) & 1),
                                            ic.col(idx & 1)};
    // Slot m of the permuted frame is party perm[m] of the original.
    std::array<Vector2cd, 3> by_party;
    for (int m = 0; m < 3; ++m) by_party[perm[m]] = slot_vec[m];
    d.terms.push_back({coeff, by_party[0], by_party[1], by_party[2]});
  }
  return d;
}

ProductDecomposition schmidt_pair_decomposition(const PureState3& state,
                                                Party unentangled) {
  const PartySubset which = unentangled == Party::A   ? PartySubset::A
                            : unentangled == Party::B ? PartySubset::B
                                                      : PartySubset::C;
  const Vector2cd a = hermitian2_top_eigenvector(reduced(state, which).rho);

  Matrix2cd chi = Matrix2cd::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        const cd w = state.amp(i, j, k);
        switch (unentangled) {
          case Party::A:
            chi(j, k) += std::conj(a(i)) * w;
            break;
          case Party::B:
            chi(i, k) += std::conj(a(j)) * w;
            break;
          case Party::C:
            chi(i, j) += std::conj(a(k)) * w;
            break;
        }
      }
    }
  }
  const Svd2 sv = svd2(chi);
  ProductDecomposition d;
  for (int m = 0; m < 2; ++m) {
    const double s = m == 0 ? sv.s0 : sv.s1;
    if (s <= tol::kTermLeak) continue;
    const Vector2cd u = sv.U.col(m);
    const Vector2cd v = sv.V.col(m).conjugate();
    switch (unentangled) {
      case Party::A:
        d.terms.push_back({cd(s), a, u, v});
        break;
      case Party::B:
        d.terms.push_back({cd(s), u, a, v});
        break;
      case Party::C:
        d.terms.push_back({cd(s), u, v, a});
        break;
    }
  }
  return d;
}

}  // namespace

ProductDecomposition minimal_decomposition(const PureState3& state,
                                           const EntanglementClass& cls) {
  ProductDecomposition d;
  switch (cls.tag) {
    case ClassTag::T1:
    case ClassTag::T2b:
    case ClassTag::T3a:
    case ClassTag::T3b:
    case ClassTag::T4a:
    case ClassTag::Generic5:
      d = from_canonical_singled(state, Party::A);
      break;
    case ClassTag::T2a:
      d = schmidt_pair_decomposition(state, cls.party.value_or(Party::A));
      break;
    case ClassTag::T4b:
      // mu2 = 0 (party B variant) and mu3 = 0 (party C) are visible with
      // party A singled out; the J1 = J5 = 0 variant needs party B.
      d = from_canonical_singled(
          state, cls.party == Party::A ? Party::B : Party::A);
      break;
    case ClassTag::T4c:
      // mu1 vanishes when the variant's party is the singled-out one.
      d = from_canonical_singled(state, cls.party.value_or(Party::A));
      break;
    case ClassTag::T4d: {
      const Type4dForm f = type4d_form(state);
      const Matrix2cd ia = f.gauge.totalA().adjoint();
      const Matrix2cd ib = f.gauge.totalB().adjoint();
      const Matrix2cd ic = f.gauge.totalC().adjoint();
      const std::array<int, 4> idx{1, 2, 4, 7};
      for (int m = 0; m < 4; ++m) {
        if (f.l[m] <= tol::kTermLeak) continue;
        d.terms.push_back({cd(f.l[m]), ia.col((idx[m] >> 2) & 1),
                           ib.col((idx[m] >> 1) & 1), ic.col(idx[m] & 1)});
      }
      break;
    }
  }
  if (static_cast<int>(d.terms.size()) > cls.nu) {
    throw ClassMismatchError(
        "minimal decomposition produced " + std::to_string(d.terms.size()) +
        " terms for a nu = " + std::to_string(cls.nu) + " class");
  }
  return d;
}

RealBasisResult is_real(const PureState3& state, double eps) {
  const JContext ctx = j_context(state);
  RealBasisResult r;
  const double cond_phase = std::abs(ctx.sqrtJ123 - std::abs(ctx.J[4]) / 2.0);
  const double cond_delta = std::abs(ctx.deltaJ);
  if (cond_phase <= eps) {
    r.is_real = true;
    r.witness = RealBasisResult::Witness::PhaseBoundary;
  } else if (cond_delta <= eps) {
    r.is_real = true;
    r.witness = RealBasisResult::Witness::DeltaJ;
  }
  return r;
}

namespace {

// Appendix-style half-angle basis change: e^{-i delta/6} times
// [[cos(g/2), sin(g/2)], [-i sin(g/2), i cos(g/2)]].
Matrix2cd half_angle_w(double gamma, double delta) {
  const double ct = std::cos(gamma / 2.0);
  const double st = std::sin(gamma / 2.0);
  Matrix2cd w;
  w << ct, st, cd(0.0, -st), cd(0.0, ct);
  return std::polar(1.0, -delta / 6.0) * w;
}

RealBasisResult real_basis_from_canonical(const PureState3& state) {
  const CanonicalForm cf = acin_canonical(state);
  RealBasisResult r;
  r.is_real = true;
  r.witness = RealBasisResult::Witness::PhaseBoundary;
  r.gauge = cf.gauge;
  r.real_amplitudes = {cf.lambda[0],
                       0.0,
                       0.0,
                       0.0,
                       cf.lambda[1] * std::cos(cf.phi),
                       cf.lambda[2],
                       cf.lambda[3],
                       cf.lambda[4]};
  r.max_imag = std::abs(cf.lambda[1] * std::sin(cf.phi));
  return r;
}

}  // namespace

RealBasisResult real_basis(const PureState3& state, double eps) {
  const RealBasisResult decision = is_real(state, eps);
  if (!decision.is_real) {
    throw NotRealError("state fails both reality conditions");
  }
  if (decision.witness == RealBasisResult::Witness::PhaseBoundary) {
    return real_basis_from_canonical(state);
  }

  // Delta_J route: alpha = beta in the two-term form and the half-angle
  // bases make every coordinate real.
  GhzDecomposition g;
  try {
    g = ghz_two_term(state);
  } catch (const NotGhzClassError&) {
    // J4 = 0 forces the phase-boundary condition; if it failed at eps the
    // state data are inconsistent.
    throw GhzFormRequiredError(
        "Delta_J reality route needs J4 > 0 and the canonical phase route "
        "is unavailable");
  }
  const Matrix2cd w1 = half_angle_w(g.gamma[0], g.delta);
  const Matrix2cd w2 = half_angle_w(g.gamma[1], g.delta);
  const Matrix2cd w3 = half_angle_w(g.gamma[2], g.delta);
  const PureState3 transformed = apply_local(g.pattern_state(), w1, w2, w3);

  RealBasisResult r;
  r.is_real = true;
  r.witness = RealBasisResult::Witness::DeltaJ;
  GaugeRecord step;
  step.uA = LocalUnitary(w1);
  step.uB = LocalUnitary(w2);
  step.uC = LocalUnitary(w3);
  r.gauge = step.after(g.gauge);
  for (int i = 0; i < 8; ++i) {
    r.real_amplitudes[i] = std::real(transformed[i]);
    r.max_imag = std::max(r.max_imag, std::abs(std::imag(transformed[i])));
  }
  return r;
}

ProductDecomposition real_six_lbps(const PureState3& state, double eps) {
  const RealBasisResult rb = real_basis(state, eps);

  Eigen::Matrix2d t0, t1;
  t0 << rb.real_amplitudes[0], rb.real_amplitudes[1], rb.real_amplitudes[2],
      rb.real_amplitudes[3];
  t1 << rb.real_amplitudes[4], rb.real_amplitudes[5], rb.real_amplitudes[6],
      rb.real_amplitudes[7];

  // Diagonalizing T0 with two orthogonal matrices puts the state on
  // {000, 011} plus the full second slice: six real coefficients.
  const Svd2Real sv = svd2_real(t0);
  const Eigen::Matrix2d m0 = sv.U.transpose() * t0 * sv.V;
  const Eigen::Matrix2d m1 = sv.U.transpose() * t1 * sv.V;

  GaugeRecord step;
  step.uB = LocalUnitary(Matrix2cd(sv.U.transpose().cast<cd>()));
  step.uC = LocalUnitary(Matrix2cd(sv.V.transpose().cast<cd>()));
  const GaugeRecord total = step.after(rb.gauge);

  const Matrix2cd ia = total.totalA().adjoint();
  const Matrix2cd ib = total.totalB().adjoint();
  const Matrix2cd ic = total.totalC().adjoint();

  const std::array<std::pair<int, double>, 6> slots{
      std::pair<int, double>{0, m0(0, 0)},
      {3, m0(1, 1)},
      {4, m1(0, 0)},
      {5, m1(0, 1)},
      {6, m1(1, 0)},
      {7, m1(1, 1)}};
  ProductDecomposition d;
  for (const auto& [idx, coeff] : slots) {
    if (std::abs(coeff) <= 1e-12) continue;
    d.terms.push_back({cd(coeff), ia.col((idx >> 2) & 1),
                       ib.col((idx >> 1) & 1), ic.col(idx & 1)});
  }
  return d;
}

Type4dForm type4d_form(const PureState3& state, double eps) {
  const EntanglementClass cls = classify(state, eps);
  if (cls.tag != ClassTag::T4d) {
    throw NotType4dError("state classifies as type " +
                         class_tag_name(cls.tag) + ", not 4d");
  }
  const GhzDecomposition g = ghz_two_term(state);
  if (std::abs(std::sin(g.delta)) > 1e-6) {
    throw Error("type 4d requires the two-term phase to be 0 or pi");
  }
  const bool delta_zero = std::cos(g.delta) > 0.0;

  const Matrix2cd w1 = half_angle_w(g.gamma[0], g.delta);
  const Matrix2cd w2 = half_angle_w(g.gamma[1], g.delta);
  const Matrix2cd w3 = half_angle_w(g.gamma[2], g.delta);
  PureState3 transformed = apply_local(g.pattern_state(), w1, w2, w3);
  GaugeRecord step;
  step.uA = LocalUnitary(w1);
  step.uB = LocalUnitary(w2);
  step.uC = LocalUnitary(w3);
  GaugeRecord total = step.after(g.gauge);

  if (delta_zero) {
    // delta = 0 lands on {000, 011, 101, 110}; flipping every party maps it
    // onto the 4d pattern {111, 100, 010, 001}.
    Matrix2cd x;
    x << 0.0, 1.0, 1.0, 0.0;
    transformed = apply_local(transformed, x, x, x);
    GaugeRecord flip;
    flip.uA = LocalUnitary(x);
    flip.uB = LocalUnitary(x);
    flip.uC = LocalUnitary(x);
    total = flip.after(total);
  }

  // Make the four pattern coefficients real positive with one diagonal
  // phase per basis vector.
  const auto arg_of = [&transformed](int idx) {
    return std::abs(transformed[idx]) > tol::kDegenerateLambda
               ? std::arg(transformed[idx])
               : 0.0;
  };
  const double p1 = arg_of(1), p2 = arg_of(2), p3 = arg_of(4), p4 = arg_of(7);
  const double x0 = (-p1 + p4 - p2 + p3) / 2.0;
  const double y0 = (-p1 + p4 + p2 - p3) / 2.0;
  const double z0 = -p2 - x0;
  const double z1 = -p4;
  GaugeRecord phase;
  phase.uA = LocalUnitary::phase_diag(x0, 0.0);
  phase.uB = LocalUnitary::phase_diag(y0, 0.0);
  phase.uC = LocalUnitary::phase_diag(z0, z1);
  total = phase.after(total);

  Type4dForm f;
  f.l = {std::abs(transformed[1]), std::abs(transformed[2]),
         std::abs(transformed[4]), std::abs(transformed[7])};
  f.gauge = total;
  return f;
}

PureState3 Type4dForm::pattern_state() const {
  std::array<cd, 8> t{};
  t[1] = l[0];
  t[2] = l[1];
  t[4] = l[2];
  t[7] = l[3];
  return PureState3::normalized(t);
}

PureState3 Type4dForm::reconstruct() const {
  return gauge.apply_inverse(pattern_state());
}

}  // namespace triqubit
