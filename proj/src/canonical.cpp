#include "triqubit/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "triqubit/random.hpp"

namespace triqubit {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_angle(double a) {
  // Principal value in (-pi, pi].
  a = std::fmod(a, 2.0 * kPi);
  if (a <= -kPi) a += 2.0 * kPi;
  if (a > kPi) a -= 2.0 * kPi;
  return a;
}

cd det2(const Matrix2cd& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

// Mixed pencil coefficient: det(T0 + T1) - det(T0) - det(T1).
cd mixed_term(const MatrixSlicePair& s) {
  return s.T0(0, 0) * s.T1(1, 1) + s.T1(0, 0) * s.T0(1, 1) -
         s.T0(0, 1) * s.T1(1, 0) - s.T1(0, 1) * s.T0(1, 0);
}

struct PhaseSolution {
  double a0 = 0.0;  // phase of |0>_A
  double a1 = 0.0;  // phase of |1>_A
  double b1 = 0.0;  // phase of |1>_B
  double g1 = 0.0;  // phase of |1>_C
};

// Absorbs the phases of the M-matrix entries per the fixed order: lambda0
// via the |0>_A phase, then lambda4, lambda2, lambda3 via |1>_A, |1>_B,
// |1>_C, the residual landing on the lambda1 entry. Entries below
// tol::kDegenerateLambda free their equation; the surplus freedom zeroes
// the lambda1 phase when possible.
PhaseSolution absorb_phases(cd m00, cd m11, cd m12, cd m21, cd m22) {
  PhaseSolution p;
  const bool nz1 = std::abs(m11) > tol::kDegenerateLambda;
  const bool nz2 = std::abs(m12) > tol::kDegenerateLambda;
  const bool nz3 = std::abs(m21) > tol::kDegenerateLambda;
  const bool nz4 = std::abs(m22) > tol::kDegenerateLambda;

  p.a0 = std::abs(m00) > tol::kDegenerateLambda ? -std::arg(m00) : 0.0;

  const double p1 = nz1 ? std::arg(m11) : 0.0;
  const double p2 = nz2 ? std::arg(m12) : 0.0;
  const double p3 = nz3 ? std::arg(m21) : 0.0;
  const double p4 = nz4 ? std::arg(m22) : 0.0;

  if (nz2 && nz3 && nz4) {
    // Full system: a1 + g1 = -p2, a1 + b1 = -p3, a1 + b1 + g1 = -p4.
    p.a1 = p4 - p2 - p3;
    p.b1 = -p3 - p.a1;
    p.g1 = -p2 - p.a1;
    return p;
  }
  // At least one equation vacuous: the |1>_A phase can zero the residual.
  p.a1 = nz1 ? -p1 : 0.0;
  if (nz2 && nz3) {  // lambda4 = 0
    p.b1 = -p3 - p.a1;
    p.g1 = -p2 - p.a1;
  } else if (nz3 && nz4) {  // lambda2 = 0
    p.g1 = p3 - p4;
    p.b1 = -p3 - p.a1;
  } else if (nz2 && nz4) {  // lambda3 = 0
    p.b1 = p2 - p4;
    p.g1 = -p2 - p.a1;
  } else if (nz4) {
    p.b1 = -p4 - p.a1;
  } else if (nz3) {
    p.b1 = -p3 - p.a1;
  } else if (nz2) {
    p.g1 = -p2 - p.a1;
  }
  return p;
}

// One canonical-form candidate from one pencil root. The phase is the
// realized one in (-pi, pi]; callers decide validity and folding.
CanonicalForm build_candidate(const PureState3& state,
                              const HomogeneousRoot& root,
                              QuadraticRoots::Kind kind) {
  const MatrixSlicePair s = slice(state);
  Matrix2cd uA;
  uA << root.u0, root.u1, -std::conj(root.u1), std::conj(root.u0);
  const Matrix2cd t0p = root.u0 * s.T0 + root.u1 * s.T1;
  const Matrix2cd t1p =
      -std::conj(root.u1) * s.T0 + std::conj(root.u0) * s.T1;

  // Diagonalize the singular slice; when it vanishes entirely the B/C
  // freedom is unconstrained and we canonicalize the other slice instead.
  Matrix2cd u, v;
  if (t0p.cwiseAbs().maxCoeff() < 1e-14) {
    const Svd2 sv = svd2(t1p);
    u = sv.U;
    v = sv.V;
  } else {
    const Svd2 sv = svd2(t0p);
    u = sv.U;
    v = sv.V;
  }
  const Matrix2cd m0 = u.adjoint() * t0p * v;
  const Matrix2cd m1 = u.adjoint() * t1p * v;

  const PhaseSolution ph =
      absorb_phases(m0(0, 0), m1(0, 0), m1(0, 1), m1(1, 0), m1(1, 1));

  CanonicalForm cf;
  cf.lambda = {std::abs(m0(0, 0)), std::abs(m1(0, 0)), std::abs(m1(0, 1)),
               std::abs(m1(1, 0)), std::abs(m1(1, 1))};
  const bool nz1 = cf.lambda[1] > tol::kDegenerateLambda;
  cf.phi = nz1 ? wrap_angle(std::arg(m1(0, 0)) + ph.a1) : 0.0;
  cf.pencil_kind = kind;
  cf.phase_on_boundary = !nz1 || std::abs(std::sin(cf.phi)) < tol::kPhaseBoundary;
  cf.gauge.uA = LocalUnitary(uA);
  cf.gauge.uB = LocalUnitary(Matrix2cd(u.adjoint()));
  cf.gauge.uC = LocalUnitary(Matrix2cd(v.transpose()));
  cf.gauge.phases = {ph.a0, ph.a1, ph.b1, ph.g1};
  return cf;
}

// Smallest-lambda1 (then smallest-lambda0) tie-break on the phase boundary.
bool tie_break_prefers_second(const CanonicalForm& a, const CanonicalForm& b) {
  if (std::abs(a.lambda[1] - b.lambda[1]) > 1e-12) {
    return b.lambda[1] < a.lambda[1];
  }
  if (std::abs(a.lambda[0] - b.lambda[0]) > 1e-12) {
    return b.lambda[0] < a.lambda[0];
  }
  return false;
}

}  // namespace

PencilRoots pencil_roots(const MatrixSlicePair& slices) {
  const QuadraticRoots q = quadratic_homogeneous_roots(
      det2(slices.T0), mixed_term(slices), det2(slices.T1));
  return PencilRoots{q.roots, q.kind};
}

std::vector<CanonicalForm> acin_candidates(const PureState3& state) {
  const PencilRoots roots = pencil_roots(slice(state));
  std::vector<CanonicalForm> out;
  out.reserve(roots.roots.size());
  for (const HomogeneousRoot& r : roots.roots) {
    out.push_back(build_candidate(state, r, roots.kind));
  }
  return out;
}

CanonicalForm acin_canonical(const PureState3& state) {
  std::vector<CanonicalForm> cand = acin_candidates(state);

  const auto folded = [](CanonicalForm cf) {
    cf.phi = std::abs(cf.phi);
    return cf;
  };

  if (cand.size() == 1) {
    // Degenerate pencil: a single candidate, necessarily on the boundary.
    return folded(cand[0]);
  }

  // A candidate is a valid canonical form when its realized phase lies in
  // [0, pi]; boundary phases are folded by |.|, interior negative phases
  // belong to the out-of-range branch and are discarded.
  const auto interior_valid = [](const CanonicalForm& cf) {
    return !cf.phase_on_boundary && cf.phi > 0.0;
  };
  const bool valid0 = cand[0].phase_on_boundary || interior_valid(cand[0]);
  const bool valid1 = cand[1].phase_on_boundary || interior_valid(cand[1]);

  if (valid0 != valid1) return folded(valid0 ? cand[0] : cand[1]);
  if (valid0 && valid1) {
    if (interior_valid(cand[0]) != interior_valid(cand[1])) {
      // Exactly one candidate in the open interval (0, pi): unique form.
      return folded(interior_valid(cand[0]) ? cand[0] : cand[1]);
    }
    CanonicalForm chosen = tie_break_prefers_second(cand[0], cand[1])
                               ? folded(cand[1])
                               : folded(cand[0]);
    chosen.tie_break_used = true;
    return chosen;
  }
  // Neither in range; numerically possible only next to the boundary.
  CanonicalForm chosen = tie_break_prefers_second(cand[0], cand[1])
                             ? folded(cand[1])
                             : folded(cand[0]);
  chosen.tie_break_used = true;
  return chosen;
}

PureState3 CanonicalForm::pattern_state() const {
  std::array<cd, 8> t{};
  t[0] = lambda[0];
  t[4] = lambda[1] * std::polar(1.0, phi);
  t[5] = lambda[2];
  t[6] = lambda[3];
  t[7] = lambda[4];
  return PureState3::from_components(t);
}

PureState3 CanonicalForm::reconstruct() const {
  return gauge.apply_inverse(pattern_state());
}

WeakAsymmetricForm weak_asymmetric(const CanonicalForm& cf) {
  WeakAsymmetricForm w;
  const double l0 = cf.lambda[0], l1 = cf.lambda[1], l2 = cf.lambda[2],
               l3 = cf.lambda[3], l4 = cf.lambda[4];
  const double rsq = l1 * l1 + l2 * l2;
  if (rsq <= tol::kEpsZero) {
    // The defining rotation is undefined; the canonical pattern already
    // lives on the weakly asymmetric set.
    w.degenerate_rotation = true;
    w.eta = {l0, 0.0, 0.0, l3, l4};
    w.phi = 0.0;
    w.gauge = cf.gauge;
    return w;
  }
  const double r = std::sqrt(rsq);
  const cd eiphi = std::polar(1.0, cf.phi);
  Matrix2cd rot;
  rot << l1 * std::conj(eiphi) / r, l2 / r, -l2 / r, l1 * eiphi / r;

  const cd c000 = l0 * l1 * std::conj(eiphi) / r;
  const cd c001 = -l0 * l2 / r;
  const cd c100 = r;
  const cd c110 = (l1 * l3 * std::conj(eiphi) + l2 * l4) / r;
  const cd c111 = (l1 * l4 * eiphi - l2 * l3) / r;

  const auto nz = [](cd z) { return std::abs(z) > tol::kDegenerateLambda; };
  double b1 = nz(c110) ? -std::arg(c110) : 0.0;
  double g1 = nz(c111) ? -std::arg(c111) - b1 : 0.0;
  double a0;
  if (nz(c001)) {
    a0 = -std::arg(c001) - g1;
  } else {
    a0 = nz(c000) ? -std::arg(c000) : 0.0;
  }
  w.eta = {std::abs(c000), std::abs(c001), std::abs(c100), std::abs(c110),
           std::abs(c111)};
  w.phi = nz(c000) ? wrap_angle(std::arg(c000) + a0) : 0.0;

  GaugeRecord step;
  step.uC = LocalUnitary(rot);
  step.phases = {a0, 0.0, b1, g1};
  w.gauge = step.after(cf.gauge);
  return w;
}

PureState3 WeakAsymmetricForm::pattern_state() const {
  std::array<cd, 8> t{};
  t[0] = eta[0] * std::polar(1.0, phi);
  t[1] = eta[1];
  t[4] = eta[2];
  t[6] = eta[3];
  t[7] = eta[4];
  return PureState3::from_components(t);
}

PureState3 WeakAsymmetricForm::reconstruct() const {
  return gauge.apply_inverse(pattern_state());
}

ClosestProduct closest_product_state(const PureState3& state,
                                     const ClosestProductOptions& opts) {
  ClosestProduct best;

  const auto contract_a = [&state](const Vector2cd& b, const Vector2cd& c) {
    Vector2cd v = Vector2cd::Zero();
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) {
          v(i) += std::conj(b(j)) * std::conj(c(k)) * state.amp(i, j, k);
        }
      }
    }
    return v;
  };
  const auto contract_b = [&state](const Vector2cd& a, const Vector2cd& c) {
    Vector2cd v = Vector2cd::Zero();
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) {
          v(j) += std::conj(a(i)) * std::conj(c(k)) * state.amp(i, j, k);
        }
      }
    }
    return v;
  };
  const auto contract_c = [&state](const Vector2cd& a, const Vector2cd& b) {
    Vector2cd v = Vector2cd::Zero();
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) {
          v(k) += std::conj(a(i)) * std::conj(b(j)) * state.amp(i, j, k);
        }
      }
    }
    return v;
  };

  for (int restart = 0; restart < std::max(1, opts.restarts); ++restart) {
    Vector2cd a, b, c;
    if (restart == 0) {
      // Warm start at the dominant computational product state.
      int arg = 0;
      for (int idx = 1; idx < 8; ++idx) {
        if (std::abs(state[idx]) > std::abs(state[arg])) arg = idx;
      }
      a = Vector2cd::Unit((arg >> 2) & 1);
      b = Vector2cd::Unit((arg >> 1) & 1);
      c = Vector2cd::Unit(arg & 1);
    } else {
      Rng rng(derive_seed(opts.seed, static_cast<std::uint64_t>(restart)));
      a = haar_random_qubit(rng);
      b = haar_random_qubit(rng);
      c = haar_random_qubit(rng);
    }

    double overlap = 0.0;
    bool converged = false;
    for (int iter = 0; iter < opts.max_iters; ++iter) {
      // The optimal factor given the other two is the normalized partial
      // contraction; conjugated so that |<Psi|abc>| grows monotonically.
      Vector2cd va = contract_a(b, c);
      if (va.norm() > 1e-300) a = va / va.norm();
      Vector2cd vb = contract_b(a, c);
      if (vb.norm() > 1e-300) b = vb / vb.norm();
      Vector2cd vc = contract_c(a, b);
      const double amp = vc.norm();
      if (amp > 1e-300) c = vc / amp;
      const double next = amp * amp;
      if (std::abs(next - overlap) < opts.tolerance) {
        overlap = next;
        converged = true;
        break;
      }
      overlap = next;
    }
    if (overlap > best.overlap || best.best_restart < 0) {
      best.a = a;
      best.b = b;
      best.c = c;
      best.overlap = overlap;
      best.converged = converged;
      best.best_restart = restart;
    } else if (converged && !best.converged &&
               overlap > best.overlap - 1e-13) {
      best.converged = true;
    }
  }
  return best;
}

namespace {

// Unitary sending the given unit vector to |1>.
Matrix2cd rotate_to_one(const Vector2cd& a) {
  Matrix2cd r;
  r << -a(1), a(0), std::conj(a(0)), std::conj(a(1));
  return r;
}

SymmetricForm symmetric_form_attempt(const PureState3& state,
                                     const ClosestProductOptions& opts) {
  const ClosestProduct cp = closest_product_state(state, opts);
  const Matrix2cd ra = rotate_to_one(cp.a);
  const Matrix2cd rb = rotate_to_one(cp.b);
  const Matrix2cd rc = rotate_to_one(cp.c);
  const PureState3 rotated = apply_local(state, ra, rb, rc);

  SymmetricForm f;
  f.residual = std::max({std::abs(rotated.amp(1, 1, 0)),
                         std::abs(rotated.amp(1, 0, 1)),
                         std::abs(rotated.amp(0, 1, 1))});

  const cd c000 = rotated.amp(0, 0, 0);
  const cd c001 = rotated.amp(0, 0, 1);
  const cd c010 = rotated.amp(0, 1, 0);
  const cd c100 = rotated.amp(1, 0, 0);
  const cd c111 = rotated.amp(1, 1, 1);

  const auto nz = [](cd z) { return std::abs(z) > tol::kDegenerateLambda; };
  const double a1 = nz(c100) ? -std::arg(c100) : 0.0;
  const double target111 = -std::arg(c111) - a1;  // b1 + g1
  double b1, g1, a0;
  if (nz(c010) && nz(c001)) {
    const double t010 = -std::arg(c010);  // a0 + b1
    const double t001 = -std::arg(c001);  // a0 + g1
    b1 = (target111 + t010 - t001) / 2.0;
    g1 = target111 - b1;
    a0 = t010 - b1;
  } else if (nz(c010)) {
    g1 = 0.0;
    b1 = target111;
    a0 = -std::arg(c010) - b1;
  } else if (nz(c001)) {
    b1 = 0.0;
    g1 = target111;
    a0 = -std::arg(c001) - g1;
  } else {
    b1 = 0.0;
    g1 = target111;
    a0 = nz(c000) ? -std::arg(c000) : 0.0;
  }

  double theta = nz(c000) ? wrap_angle(std::arg(c000) + a0) : 0.0;
  if (theta < 0.0) theta += 2.0 * kPi;
  if (theta >= kPi && nz(c000)) {
    // diag(-1,1) x diag(1,-1) x diag(1,-1) flips the |000> coefficient and
    // none of the other four support slots.
    a0 += kPi;
    b1 += kPi;
    g1 += kPi;
    theta -= kPi;
  }
  if (!nz(c000)) theta = 0.0;

  f.kappa = {std::abs(c000), std::abs(c001), std::abs(c010), std::abs(c100),
             std::abs(c111)};
  f.theta = theta;
  f.gauge.uA = LocalUnitary(ra);
  f.gauge.uB = LocalUnitary(rb);
  f.gauge.uC = LocalUnitary(rc);
  f.gauge.phases = {a0, a1, b1, g1};
  return f;
}

}  // namespace

SymmetricForm symmetric_form(const PureState3& state,
                             const ClosestProductOptions& opts) {
  ClosestProductOptions attempt = opts;
  for (int round = 0; round < 3; ++round) {
    const SymmetricForm f = symmetric_form_attempt(state, attempt);
    if (f.residual < tol::kSymmetricResidual) return f;
    attempt.restarts *= 3;  // optimizer likely stuck on a local maximum
    attempt.seed = derive_seed(attempt.seed, 0xfeadu + round);
  }
  throw ResidualTooLargeError(
      "symmetric form: t110/t101/t011 failed to vanish; the product-state "
      "optimizer did not reach the global maximum");
}

PureState3 SymmetricForm::pattern_state() const {
  std::array<cd, 8> t{};
  t[0] = kappa[0] * std::polar(1.0, theta);
  t[1] = kappa[1];
  t[2] = kappa[2];
  t[4] = kappa[3];
  t[7] = kappa[4];
  return PureState3::normalized(t);
}

PureState3 SymmetricForm::reconstruct() const {
  return gauge.apply_inverse(pattern_state());
}

GhzDecomposition ghz_two_term(const PureState3& state) {
  const CanonicalForm cf = acin_canonical(state);
  const double l0 = cf.lambda[0], l1 = cf.lambda[1], l2 = cf.lambda[2],
               l3 = cf.lambda[3], l4 = cf.lambda[4];
  const double j4 = cf.mu(0) * cf.mu(4);
  if (j4 <= tol::kEpsZero) {
    throw NotGhzClassError("two-term decomposition requires J4 > 0");
  }

  // In the canonical gauge the slices are M0 = diag(l0, 0) and M1; the
  // canonicalizing root is (1, 0) and the second root solves
  // l0 l4 + x (l1 l4 e^{i phi} - l2 l3) = 0.
  Matrix2cd m0 = Matrix2cd::Zero();
  m0(0, 0) = l0;
  Matrix2cd m1;
  const cd eiphi = std::polar(1.0, cf.phi);
  m1 << l1 * eiphi, l2, l3, l4;
  const cd kcoef = l1 * l4 * eiphi - l2 * l3;
  const HomogeneousRoot q = make_homogeneous(kcoef, -l0 * l4);

  // Psi = f1 (x) S1 + f2 (x) S2 with S_i the rank-1 pencil combinations and
  // (f1, f2) the columns of the inverse root matrix [[1, 0], [q0, q1]].
  const Vector2cd f1(1.0, -q.u0 / q.u1);
  const Vector2cd f2(0.0, 1.0 / q.u1);
  const Matrix2cd s2m = q.u0 * m0 + q.u1 * m1;
  const Svd2 sv = svd2(s2m);

  struct Term {
    cd coeff;
    Vector2cd a, b, c;
  };
  Term t1{cd(l0 * f1.norm()), f1 / f1.norm(), Vector2cd::Unit(0),
          Vector2cd::Unit(0)};
  Term t2{cd(sv.s0 * f2.norm()), f2 / f2.norm(), sv.U.col(0),
          Vector2cd(sv.V.col(0).conjugate())};

  GhzDecomposition g;
  Matrix2cd rot[3];
  const Vector2cd* first[3] = {&t1.a, &t1.b, &t1.c};
  const Vector2cd* second[3] = {&t2.a, &t2.b, &t2.c};
  cd phase_collected = 1.0;
  for (int p = 0; p < 3; ++p) {
    // Send the first term's factor to |0>; the second factor becomes
    // (cos gamma, sin gamma) after pushing its phases into the coefficient.
    const Vector2cd& v1 = *first[p];
    Matrix2cd r;
    r << std::conj(v1(0)), std::conj(v1(1)), -v1(1), v1(0);
    Vector2cd w = r * (*second[p]);
    const double zeta =
        std::abs(w(0)) > 1e-15 ? std::arg(w(0)) : std::arg(w(1));
    w *= std::polar(1.0, -zeta);
    phase_collected *= std::polar(1.0, zeta);
    const double chi = std::abs(w(1)) > 1e-15 ? std::arg(w(1)) : 0.0;
    Matrix2cd fix = Matrix2cd::Identity();
    fix(1, 1) = std::polar(1.0, -chi);
    rot[p] = fix * r;
    w(1) *= std::polar(1.0, -chi);
    g.gamma[p] = std::atan2(std::real(w(1)), std::real(w(0)));
  }

  const cd c1 = t1.coeff;
  const cd c2 = t2.coeff * phase_collected * std::polar(1.0, -std::arg(c1));
  g.alpha = std::abs(c1);
  g.beta = std::abs(c2);
  g.delta = std::arg(c2);

  GaugeRecord step;
  step.uA = LocalUnitary(Matrix2cd(std::polar(1.0, -std::arg(c1)) * rot[0]));
  step.uB = LocalUnitary(rot[1]);
  step.uC = LocalUnitary(rot[2]);
  g.gauge = step.after(cf.gauge);

  // Closed-form parameter identities in terms of the canonical form.
  const double mu2 = l2 * l2, mu3 = l3 * l3, mu4 = l4 * l4;
  const double alpha_ref = std::sqrt(std::norm(kcoef) + j4) / l4;
  const double beta_ref =
      std::sqrt(mu2 * mu3 + mu4 * (mu4 + mu2 + mu3)) / l4;
  if (std::abs(g.alpha - alpha_ref) > 1e-6 ||
      std::abs(g.beta - beta_ref) > 1e-6) {
    throw Error("two-term decomposition failed its parameter cross-check");
  }
  return g;
}

PureState3 GhzDecomposition::pattern_state() const {
  std::array<cd, 8> t{};
  t[0] = alpha;
  const cd be = beta * std::polar(1.0, delta);
  const double c1 = std::cos(gamma[0]), s1 = std::sin(gamma[0]);
  const double c2 = std::cos(gamma[1]), s2 = std::sin(gamma[1]);
  const double c3 = std::cos(gamma[2]), s3 = std::sin(gamma[2]);
  const double f[2][3] = {{c1, c2, c3}, {s1, s2, s3}};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        t[4 * i + 2 * j + k] += be * f[i][0] * f[j][1] * f[k][2];
      }
    }
  }
  return PureState3::from_components(t);
}

PureState3 GhzDecomposition::reconstruct() const {
  return gauge.apply_inverse(pattern_state());
}

ProductDecomposition GhzDecomposition::decomposition() const {
  ProductDecomposition d;
  const Matrix2cd ia = gauge.totalA().adjoint();
  const Matrix2cd ib = gauge.totalB().adjoint();
  const Matrix2cd ic = gauge.totalC().adjoint();
  d.terms.push_back({cd(alpha), ia.col(0), ib.col(0), ic.col(0)});
  Vector2cd p1(std::cos(gamma[0]), std::sin(gamma[0]));
  Vector2cd p2(std::cos(gamma[1]), std::sin(gamma[1]));
  Vector2cd p3(std::cos(gamma[2]), std::sin(gamma[2]));
  d.terms.push_back({beta * std::polar(1.0, delta), ia * p1, ib * p2, ic * p3});
  return d;
}

PureState3 ProductDecomposition::to_state() const {
  std::array<cd, 8> t{};
  for (const Term& term : terms) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) {
          t[4 * i + 2 * j + k] += term.coeff * term.a(i) * term.b(j) * term.c(k);
        }
      }
    }
  }
  return PureState3::from_components(t);
}

PureState3 reconstruct(const CanonicalForm& form) { return form.reconstruct(); }
PureState3 reconstruct(const WeakAsymmetricForm& form) {
  return form.reconstruct();
}
PureState3 reconstruct(const SymmetricForm& form) { return form.reconstruct(); }
PureState3 reconstruct(const GhzDecomposition& form) {
  return form.reconstruct();
}

}  // namespace triqubit
