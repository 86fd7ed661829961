#include "triqubit/linalg2.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace triqubit {

namespace {

constexpr double kTinySingular = 1e-300;

Vector2cd orthogonal_complement(const Vector2cd& v) {
  return Vector2cd(-std::conj(v(1)), std::conj(v(0)));
}

}  // namespace

Svd2 svd2(const Matrix2cd& t) {
  Svd2 out;
  const Matrix2cd h = t.adjoint() * t;
  const double h00 = std::real(h(0, 0));
  const double h11 = std::real(h(1, 1));
  const cd h01 = h(0, 1);
  const double dif = h00 - h11;
  const double rad = std::sqrt(dif * dif + 4.0 * std::norm(h01));
  const double eplus = (h00 + h11 + rad) / 2.0;
  const double eminus = std::max((h00 + h11 - rad) / 2.0, 0.0);

  // Dominant right singular vector: two algebraically equivalent candidate
  // expressions; take the larger one to avoid cancellation.
  Vector2cd v0;
  const Vector2cd cand1(h01, cd(eplus - h00));
  const Vector2cd cand2(cd(eplus - h11), std::conj(h01));
  const double n1 = cand1.norm();
  const double n2 = cand2.norm();
  if (std::max(n1, n2) < 1e-18 * std::max(1.0, eplus)) {
    v0 = Vector2cd(1.0, 0.0);  // t^dag t is (numerically) a multiple of 1
  } else {
    v0 = (n1 >= n2) ? cand1 / n1 : cand2 / n2;
  }
  const Vector2cd v1 = orthogonal_complement(v0);

  out.s0 = std::sqrt(eplus);
  out.s1 = std::sqrt(eminus);

  Vector2cd u0;
  if (out.s0 > kTinySingular) {
    const Vector2cd w = t * v0;
    u0 = w / w.norm();
  } else {
    u0 = Vector2cd(1.0, 0.0);
  }
  Vector2cd u1;
  const Vector2cd w1 = t * v1;
  if (w1.norm() > 1e-15 * std::max(1.0, out.s0)) {
    u1 = w1 / w1.norm();
  } else {
    u1 = orthogonal_complement(u0);
  }

  out.U.col(0) = u0;
  out.U.col(1) = u1;
  out.V.col(0) = v0;
  out.V.col(1) = v1;
  return out;
}

Svd2Real svd2_real(const Eigen::Matrix2d& t) {
  Svd2Real out;
  const Eigen::Matrix2d h = t.transpose() * t;
  const double theta = 0.5 * std::atan2(2.0 * h(0, 1), h(0, 0) - h(1, 1));
  Eigen::Matrix2d v;
  v << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  Eigen::Vector2d w0 = t * v.col(0);
  Eigen::Vector2d w1 = t * v.col(1);
  if (w0.norm() < w1.norm()) {
    v.col(0).swap(v.col(1));
    w0.swap(w1);
  }
  out.s0 = w0.norm();
  out.s1 = w1.norm();

  Eigen::Vector2d u0 = out.s0 > kTinySingular ? Eigen::Vector2d(w0 / out.s0)
                                              : Eigen::Vector2d(1.0, 0.0);
  Eigen::Vector2d u1;
  if (out.s1 > 1e-15 * std::max(1.0, out.s0)) {
    u1 = w1 / out.s1;
  } else {
    u1 = Eigen::Vector2d(-u0(1), u0(0));
  }
  out.U.col(0) = u0;
  out.U.col(1) = u1;
  out.V = v;
  return out;
}

HomogeneousRoot make_homogeneous(cd u0, cd u1) {
  const double n = std::sqrt(std::norm(u0) + std::norm(u1));
  u0 /= n;
  u1 /= n;
  // Phase convention: larger component real positive.
  const cd lead = std::abs(u0) >= std::abs(u1) ? u0 : u1;
  const cd phase = std::abs(lead) > 0 ? std::conj(lead) / std::abs(lead) : 1.0;
  HomogeneousRoot r{u0 * phase, u1 * phase};
  if (std::abs(r.u0) < 1e-15) r.u0 = 0.0;
  if (std::abs(r.u1) < 1e-15) r.u1 = 0.0;
  return r;
}

QuadraticRoots quadratic_homogeneous_roots(cd c0, cd c1, cd c2) {
  QuadraticRoots out;
  const double scale = std::max({std::abs(c0), std::abs(c1), std::abs(c2)});
  if (scale < tol::kSingularPencil) {
    out.kind = QuadraticRoots::Kind::IdenticallySingular;
    out.roots.push_back(make_homogeneous(1.0, 0.0));
    return out;
  }
  const cd disc = c1 * c1 - 4.0 * c0 * c2;
  if (std::abs(disc) <= 1e-24 * scale * scale) {
    out.kind = QuadraticRoots::Kind::Double;
    // (2 c2, -c1) and (-c1, 2 c0) both represent the double root; use the
    // larger for stability.
    const double na = std::abs(2.0 * c2) + std::abs(c1);
    const double nb = std::abs(c1) + std::abs(2.0 * c0);
    if (std::max(na, nb) < 1e-15 * scale) {
      // c1 = c2 = 0 with c0 != 0: double root at infinity.
      out.roots.push_back(make_homogeneous(0.0, 1.0));
    } else if (na >= nb) {
      out.roots.push_back(make_homogeneous(2.0 * c2, -c1));
    } else {
      out.roots.push_back(make_homogeneous(-c1, 2.0 * c0));
    }
    return out;
  }
  out.kind = QuadraticRoots::Kind::Distinct;
  const cd sq = std::sqrt(disc);
  // Sign choice avoiding cancellation in c1 + s*sq.
  const double sgn =
      std::real(std::conj(c1) * sq) >= 0.0 ? 1.0 : -1.0;
  const cd q = -(c1 + sgn * sq) / 2.0;
  // Viewed as c2 x^2 + c1 x + c0 with x = u1/u0: roots q/c2 and c0/q.
  HomogeneousRoot r1 = make_homogeneous(c2, q);
  HomogeneousRoot r2 = make_homogeneous(q, c0);
  // Deterministic order: ascending |x|, infinity last, ties by arg(x).
  const auto key = [](const HomogeneousRoot& r) {
    if (r.is_infinite()) {
      return std::pair<double, double>(std::numeric_limits<double>::infinity(),
                                       0.0);
    }
    const cd x = r.ratio();
    return std::pair<double, double>(std::abs(x), std::arg(x));
  };
  if (key(r2) < key(r1)) std::swap(r1, r2);
  out.roots = {r1, r2};
  return out;
}

PolyRoots poly_roots(const std::vector<cd>& coeffs, double lead_tol_rel) {
  PolyRoots out;
  double maxc = 0.0;
  for (const cd& c : coeffs) maxc = std::max(maxc, std::abs(c));
  if (maxc == 0.0) {
    out.identically_zero = true;
    return out;
  }
  int degree = static_cast<int>(coeffs.size()) - 1;
  while (degree > 0 && std::abs(coeffs[degree]) <= lead_tol_rel * maxc) {
    --degree;
    ++out.at_infinity;
  }
  if (degree <= 0) return out;
  if (degree == 1) {
    out.finite.push_back(-coeffs[0] / coeffs[1]);
    return out;
  }
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
  for (int i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < degree; ++i) {
    companion(i, degree - 1) = -coeffs[i] / coeffs[degree];
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  for (int i = 0; i < degree; ++i) out.finite.push_back(solver.eigenvalues()(i));
  return out;
}

}  // namespace triqubit
