#include "triqubit/state.hpp"

#include <cmath>

namespace triqubit {

namespace {

template <std::size_t N>
double norm_of(std::span<const cd, N> raw) {
  double s = 0.0;
  for (const cd& a : raw) s += std::norm(a);
  return std::sqrt(s);
}

template <std::size_t N>
bool all_below(std::span<const cd, N> raw, double mag) {
  for (const cd& a : raw) {
    if (std::abs(a) >= mag) return false;
  }
  return true;
}

}  // namespace

PureState3 PureState3::normalized(std::span<const cd, 8> raw) {
  if (all_below(raw, tol::kZeroAmplitude)) {
    throw ZeroStateError("cannot normalize the zero state");
  }
  const double n = norm_of(raw);
  std::array<cd, 8> t;
  for (int i = 0; i < 8; ++i) t[i] = raw[i] / n;
  return PureState3(t);
}

PureState3 PureState3::from_components(std::span<const cd, 8> raw) {
  const double n = norm_of(raw);
  if (std::abs(n - 1.0) > 1e-6) {
    throw Error("components are not normalized (norm " + std::to_string(n) +
                ")");
  }
  std::array<cd, 8> t;
  for (int i = 0; i < 8; ++i) t[i] = raw[i] / n;
  return PureState3(t);
}

PureState3 PureState3::conjugated() const {
  std::array<cd, 8> t;
  for (int i = 0; i < 8; ++i) t[i] = std::conj(t_[i]);
  return PureState3(t);
}

double PureState3::fidelity(const PureState3& other) const {
  cd ip = 0.0;
  for (int i = 0; i < 8; ++i) ip += std::conj(t_[i]) * other.t_[i];
  return std::abs(ip);
}

PureState4 PureState4::normalized(std::span<const cd, 16> raw) {
  if (all_below(raw, tol::kZeroAmplitude)) {
    throw ZeroStateError("cannot normalize the zero state");
  }
  const double n = norm_of(raw);
  std::array<cd, 16> t;
  for (int i = 0; i < 16; ++i) t[i] = raw[i] / n;
  return PureState4(t);
}

PureState4 PureState4::from_components(std::span<const cd, 16> raw) {
  const double n = norm_of(raw);
  if (std::abs(n - 1.0) > 1e-6) {
    throw Error("components are not normalized (norm " + std::to_string(n) +
                ")");
  }
  std::array<cd, 16> t;
  for (int i = 0; i < 16; ++i) t[i] = raw[i] / n;
  return PureState4(t);
}

double PureState4::fidelity(const PureState4& other) const {
  cd ip = 0.0;
  for (int i = 0; i < 16; ++i) ip += std::conj(t_[i]) * other.t_[i];
  return std::abs(ip);
}

MatrixSlicePair slice(const PureState3& state) {
  MatrixSlicePair s;
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      s.T0(j, k) = state.amp(0, j, k);
      s.T1(j, k) = state.amp(1, j, k);
    }
  }
  return s;
}

PureState3 reassemble(const MatrixSlicePair& slices) {
  std::array<cd, 8> t;
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      t[4 * 0 + 2 * j + k] = slices.T0(j, k);
      t[4 * 1 + 2 * j + k] = slices.T1(j, k);
    }
  }
  return PureState3::from_components(t);
}

double unitarity_defect(const Matrix2cd& u) {
  const Matrix2cd d = u.adjoint() * u - Matrix2cd::Identity();
  return d.cwiseAbs().maxCoeff();
}

LocalUnitary::LocalUnitary(const Matrix2cd& u) : u_(u) {
  if (unitarity_defect(u) > tol::kUnitary) {
    throw NonUnitaryError("matrix fails the unitarity check");
  }
}

LocalUnitary LocalUnitary::phase_diag(double a0, double a1) {
  Matrix2cd m = Matrix2cd::Zero();
  m(0, 0) = std::polar(1.0, a0);
  m(1, 1) = std::polar(1.0, a1);
  return LocalUnitary(m);
}

PureState3 apply_local(const PureState3& state, const Matrix2cd& uA,
                       const Matrix2cd& uB, const Matrix2cd& uC) {
  for (const Matrix2cd* u : {&uA, &uB, &uC}) {
    if (unitarity_defect(*u) > tol::kUnitary) {
      throw NonUnitaryError("apply_local: matrix fails the unitarity check");
    }
  }
  std::array<cd, 8> t{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        cd sum = 0.0;
        for (int a = 0; a < 2; ++a) {
          for (int b = 0; b < 2; ++b) {
            for (int c = 0; c < 2; ++c) {
              sum += uA(i, a) * uB(j, b) * uC(k, c) * state.amp(a, b, c);
            }
          }
        }
        t[4 * i + 2 * j + k] = sum;
      }
    }
  }
  return PureState3::from_components(t);
}

PureState3 apply_local(const PureState3& state, const LocalUnitary& uA,
                       const LocalUnitary& uB, const LocalUnitary& uC) {
  return apply_local(state, uA.matrix(), uB.matrix(), uC.matrix());
}

Matrix2cd GaugeRecord::totalA() const {
  Matrix2cd p = Matrix2cd::Zero();
  p(0, 0) = std::polar(1.0, phases[0]);
  p(1, 1) = std::polar(1.0, phases[1]);
  return p * uA.matrix();
}

Matrix2cd GaugeRecord::totalB() const {
  Matrix2cd p = Matrix2cd::Zero();
  p(0, 0) = 1.0;
  p(1, 1) = std::polar(1.0, phases[2]);
  return p * uB.matrix();
}

Matrix2cd GaugeRecord::totalC() const {
  Matrix2cd p = Matrix2cd::Zero();
  p(0, 0) = 1.0;
  p(1, 1) = std::polar(1.0, phases[3]);
  return p * uC.matrix();
}

PureState3 GaugeRecord::apply(const PureState3& source) const {
  return apply_local(source, totalA(), totalB(), totalC());
}

PureState3 GaugeRecord::apply_inverse(const PureState3& form) const {
  return apply_local(form, Matrix2cd(totalA().adjoint()),
                     Matrix2cd(totalB().adjoint()),
                     Matrix2cd(totalC().adjoint()));
}

GaugeRecord GaugeRecord::after(const GaugeRecord& first) const {
  GaugeRecord g;
  g.uA = LocalUnitary(Matrix2cd(totalA() * first.totalA()));
  g.uB = LocalUnitary(Matrix2cd(totalB() * first.totalB()));
  g.uC = LocalUnitary(Matrix2cd(totalC() * first.totalC()));
  return g;
}

ReducedDensity reduced(const PureState3& state, PartySubset which) {
  ReducedDensity r;
  r.which = which;
  if (which == PartySubset::AB) {
    Matrix4cd rho = Matrix4cd::Zero();
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        for (int ip = 0; ip < 2; ++ip) {
          for (int jp = 0; jp < 2; ++jp) {
            cd sum = 0.0;
            for (int k = 0; k < 2; ++k) {
              sum += state.amp(i, j, k) * std::conj(state.amp(ip, jp, k));
            }
            rho(2 * i + j, 2 * ip + jp) = sum;
          }
        }
      }
    }
    r.rho = rho;
    return r;
  }
  Matrix2cd rho = Matrix2cd::Zero();
  for (int m = 0; m < 2; ++m) {
    for (int mp = 0; mp < 2; ++mp) {
      cd sum = 0.0;
      for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
          switch (which) {
            case PartySubset::A:
              sum += state.amp(m, x, y) * std::conj(state.amp(mp, x, y));
              break;
            case PartySubset::B:
              sum += state.amp(x, m, y) * std::conj(state.amp(x, mp, y));
              break;
            case PartySubset::C:
              sum += state.amp(x, y, m) * std::conj(state.amp(x, y, mp));
              break;
            default:
              break;
          }
        }
      }
      rho(m, mp) = sum;
    }
  }
  r.rho = rho;
  return r;
}

std::array<double, 2> hermitian2_eigenvalues(const Matrix2cd& h) {
  const double tr = std::real(h(0, 0) + h(1, 1));
  const double dif = std::real(h(0, 0) - h(1, 1));
  const double rad = std::sqrt(dif * dif + 4.0 * std::norm(h(0, 1)));
  return {(tr - rad) / 2.0, (tr + rad) / 2.0};
}

PureState3 permute_parties(const PureState3& state,
                           const std::array<int, 3>& perm) {
  std::array<cd, 8> t{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        const std::array<int, 3> out{i, j, k};
        // Index of the old amplitude whose party perm[m] lands in slot m.
        std::array<int, 3> old{};
        for (int m = 0; m < 3; ++m) old[perm[m]] = out[m];
        t[4 * i + 2 * j + k] = state.amp(old[0], old[1], old[2]);
      }
    }
  }
  return PureState3::from_components(t);
}

PureState4 apply_local4(const PureState4& state, const Matrix2cd& uA,
                        const Matrix2cd& uB, const Matrix2cd& uC,
                        const Matrix2cd& uD) {
  for (const Matrix2cd* u : {&uA, &uB, &uC, &uD}) {
    if (unitarity_defect(*u) > tol::kUnitary) {
      throw NonUnitaryError("apply_local4: matrix fails the unitarity check");
    }
  }
  std::array<cd, 16> t{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          cd sum = 0.0;
          for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
              for (int c = 0; c < 2; ++c) {
                for (int d = 0; d < 2; ++d) {
                  sum += uA(i, a) * uB(j, b) * uC(k, c) * uD(l, d) *
                         state.amp(a, b, c, d);
                }
              }
            }
          }
          t[8 * i + 4 * j + 2 * k + l] = sum;
        }
      }
    }
  }
  return PureState4::from_components(t);
}

}  // namespace triqubit
