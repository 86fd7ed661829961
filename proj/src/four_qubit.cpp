#include "triqubit/four_qubit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "triqubit/canonical.hpp"
#include "triqubit/invariants.hpp"

namespace triqubit {

namespace {

using Slice8 = std::array<cd, 8>;

Slice8 slice_of(const PureState4& s, int i) {
  Slice8 out;
  for (int m = 0; m < 8; ++m) out[m] = s[8 * i + m];
  return out;
}

Slice8 combine(const Slice8& t0, const Slice8& t1, cd u0, cd u1) {
  Slice8 out;
  for (int m = 0; m < 8; ++m) out[m] = u0 * t0[m] + u1 * t1[m];
  return out;
}

cd hdet_at(const Slice8& t0, const Slice8& t1, cd u0, cd u1) {
  const Slice8 c = combine(t0, t1, u0, u1);
  return hyperdeterminant(std::span<const cd, 8>(c));
}

// Quartic coefficients of q(x) = Hdet(T0 + x T1) from five evaluations;
// exact for a degree-4 polynomial.
std::array<cd, 5> quartic_coefficients(const Slice8& t0, const Slice8& t1) {
  const cd q0 = hdet_at(t0, t1, 1.0, 0.0);
  const cd qp1 = hdet_at(t0, t1, 1.0, 1.0);
  const cd qm1 = hdet_at(t0, t1, 1.0, -1.0);
  const cd qp2 = hdet_at(t0, t1, 1.0, 2.0);
  const cd qm2 = hdet_at(t0, t1, 1.0, -2.0);

  const cd s1 = qp1 + qm1 - 2.0 * q0;  // 2 c2 + 2 c4
  const cd d1 = qp1 - qm1;             // 2 c1 + 2 c3
  const cd s2 = qp2 + qm2 - 2.0 * q0;  // 8 c2 + 32 c4
  const cd d2 = qp2 - qm2;             // 4 c1 + 16 c3

  const cd c4 = (s2 / 8.0 - s1 / 2.0) / 3.0;
  const cd c2 = s1 / 2.0 - c4;
  const cd c3 = (d2 / 4.0 - d1 / 2.0) / 3.0;
  const cd c1 = d1 / 2.0 - c3;
  return {q0, c1, c2, c3, c4};
}

// Newton refinement against the directly evaluated hyperdeterminant; the
// derivative comes from the interpolated coefficients. Roots of modulus
// above one are polished in the inverted coordinate w = u0/u1.
HomogeneousRoot polish_root(const Slice8& t0, const Slice8& t1,
                            const std::array<cd, 5>& c, HomogeneousRoot r) {
  const bool invert = std::abs(r.u1) > std::abs(r.u0);
  cd z = invert ? r.u0 / r.u1 : r.u1 / r.u0;
  const Slice8& ta = invert ? t1 : t0;
  const Slice8& tb = invert ? t0 : t1;
  std::array<cd, 5> p = c;
  if (invert) std::reverse(p.begin(), p.end());

  cd best = z;
  double best_res = std::abs(hdet_at(ta, tb, 1.0, z));
  for (int step = 0; step < 6; ++step) {
    const cd g = hdet_at(ta, tb, 1.0, z);
    const cd gp = p[1] + 2.0 * p[2] * z + 3.0 * p[3] * z * z +
                  4.0 * p[4] * z * z * z;
    if (std::abs(gp) < 1e-300) break;
    const cd dz = g / gp;
    z -= dz;
    const double res = std::abs(hdet_at(ta, tb, 1.0, z));
    if (res < best_res) {
      best_res = res;
      best = z;
    }
    if (std::abs(dz) < 1e-17) break;
  }
  return invert ? make_homogeneous(best, 1.0) : make_homogeneous(1.0, best);
}

std::pair<double, double> root_order_key(const HomogeneousRoot& r) {
  if (r.is_infinite()) {
    return {std::numeric_limits<double>::infinity(), 0.0};
  }
  const cd x = r.ratio();
  return {std::abs(x), std::arg(x)};
}

}  // namespace

PureState4 Gauge4::apply(const PureState4& source) const {
  return apply_local4(source, uA.matrix(), uB.matrix(), uC.matrix(),
                      uD.matrix());
}

PureState4 Gauge4::apply_inverse(const PureState4& form) const {
  return apply_local4(form, Matrix2cd(uA.matrix().adjoint()),
                      Matrix2cd(uB.matrix().adjoint()),
                      Matrix2cd(uC.matrix().adjoint()),
                      Matrix2cd(uD.matrix().adjoint()));
}

QuarticPencilRoots hdet_pencil_roots4(const PureState4& state) {
  QuarticPencilRoots out;
  const Slice8 t0 = slice_of(state, 0);
  const Slice8 t1 = slice_of(state, 1);
  out.coefficients = quartic_coefficients(t0, t1);

  double maxc = 0.0;
  for (const cd& c : out.coefficients) maxc = std::max(maxc, std::abs(c));
  if (maxc < tol::kSingularPencil) {
    out.identically_zero = true;
    out.roots.push_back(make_homogeneous(1.0, 0.0));
    return out;
  }

  const PolyRoots pr = poly_roots(
      std::vector<cd>(out.coefficients.begin(), out.coefficients.end()),
      1e-12);
  for (const cd& x : pr.finite) {
    out.roots.push_back(
        polish_root(t0, t1, out.coefficients, make_homogeneous(1.0, x)));
  }
  for (int m = 0; m < pr.at_infinity; ++m) {
    out.roots.push_back(make_homogeneous(0.0, 1.0));
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const HomogeneousRoot& a, const HomogeneousRoot& b) {
              return root_order_key(a) < root_order_key(b);
            });
  return out;
}

double quartic_pencil_residual(const PureState4& state,
                               const HomogeneousRoot& root) {
  return std::abs(
      hdet_at(slice_of(state, 0), slice_of(state, 1), root.u0, root.u1));
}

const std::array<int, 12>& twelve_set_indices() {
  static const std::array<int, 12> idx{0, 4, 5, 6, 8, 9, 10, 11, 12, 13, 14, 15};
  return idx;
}

const std::array<int, 4>& excluded_indices4() {
  static const std::array<int, 4> idx{1, 2, 3, 7};
  return idx;
}

TwelveTermForm reduce_to_twelve(const PureState4& state, int root_index) {
  const QuarticPencilRoots roots = hdet_pencil_roots4(state);
  if (root_index < 0) root_index = 0;  // roots are sorted by the tie-break
  root_index = std::min(root_index, static_cast<int>(roots.roots.size()) - 1);
  const HomogeneousRoot r = roots.roots[root_index];

  Matrix2cd uA;
  uA << r.u0, r.u1, -std::conj(r.u1), std::conj(r.u0);
  const PureState4 rotated = apply_local4(
      state, uA, Matrix2cd::Identity(), Matrix2cd::Identity(),
      Matrix2cd::Identity());

  // The first slice now has vanishing hyperdeterminant: as a three-qubit
  // state of parties B, C, D it is (at least) type 4a and its canonical
  // form occupies {000, 100, 101, 110} - exactly the twelve-set rows.
  Slice8 phi0;
  double n0 = 0.0;
  for (int m = 0; m < 8; ++m) {
    phi0[m] = rotated[m];
    n0 += std::norm(phi0[m]);
  }
  n0 = std::sqrt(n0);

  Matrix2cd gB = Matrix2cd::Identity();
  Matrix2cd gC = Matrix2cd::Identity();
  Matrix2cd gD = Matrix2cd::Identity();
  if (n0 > 1e-12) {
    for (auto& a : phi0) a /= n0;
    const CanonicalForm cf = acin_canonical(PureState3::normalized(phi0));
    // The slice's J4 vanishes by the root choice, so its lambda4 slot is
    // the (dropped) excluded coordinate. Move the canonical residual phase
    // from the lambda1 slot onto lambda4: the shift (0, -phi, phi, phi)
    // touches only t100 and t111 of the slice pattern.
    GaugeRecord fix;
    fix.phases = {0.0, -cf.phi, cf.phi, cf.phi};
    const GaugeRecord g = fix.after(cf.gauge);
    gB = g.totalA();
    gC = g.totalB();
    gD = g.totalC();
  }
  PureState4 shaped = apply_local4(rotated, Matrix2cd::Identity(), gB, gC, gD);

  // One uniform phase on the A = 1 block realifies its first nonzero
  // coefficient without touching the already-real first-slice pattern.
  int phase_slot = -1;
  double psi = 0.0;
  for (int idx = 8; idx < 16; ++idx) {
    if (std::abs(shaped[idx]) > 1e-12) {
      phase_slot = idx;
      psi = -std::arg(shaped[idx]);
      break;
    }
  }
  Matrix2cd blockPhase = Matrix2cd::Identity();
  blockPhase(1, 1) = std::polar(1.0, psi);
  shaped = apply_local4(shaped, blockPhase, Matrix2cd::Identity(),
                        Matrix2cd::Identity(), Matrix2cd::Identity());

  TwelveTermForm f;
  f.root_index = root_index;
  f.gauge.uA = LocalUnitary(Matrix2cd(blockPhase * uA));
  f.gauge.uB = LocalUnitary(gB);
  f.gauge.uC = LocalUnitary(gC);
  f.gauge.uD = LocalUnitary(gD);
  for (int m = 0; m < 12; ++m) {
    f.coefficients[m] = shaped[twelve_set_indices()[m]];
  }
  for (int idx : excluded_indices4()) {
    f.excluded_residual =
        std::max(f.excluded_residual, std::abs(shaped[idx]));
  }
  f.real_slots = {0, 4, 5, 6};
  if (phase_slot >= 0) f.real_slots.push_back(phase_slot);
  return f;
}

std::vector<TwelveTermForm> reduce_all_roots(const PureState4& state) {
  const QuarticPencilRoots roots = hdet_pencil_roots4(state);
  std::vector<TwelveTermForm> out;
  for (int i = 0; i < static_cast<int>(roots.roots.size()); ++i) {
    out.push_back(reduce_to_twelve(state, i));
  }
  return out;
}

PureState4 TwelveTermForm::pattern_state() const {
  std::array<cd, 16> t{};
  for (int m = 0; m < 12; ++m) t[twelve_set_indices()[m]] = coefficients[m];
  return PureState4::from_components(t);
}

PureState4 TwelveTermForm::reconstruct() const {
  return gauge.apply_inverse(pattern_state());
}

}  // namespace triqubit
