// Copyright 2026 The qslm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Unitary matrices, their principal-branch eigenphases and Haar sampling.

#ifndef QSLM_UNITARY_HPP
#define QSLM_UNITARY_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "qslm/error.hpp"

namespace qslm {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Default unitarity tolerance, scaled with the dimension.
inline double default_unitary_tol(Eigen::Index n) { return 1e-10 * static_cast<double>(n); }

/// Maps x onto (-pi, pi]. Values within 1e-12 of -pi land on +pi.
inline double wrap_angle(double x) {
  double r = std::remainder(x, kTwoPi);  // [-pi, pi]
  if (r <= -kPi + 1e-12) r += kTwoPi;
  if (r > kPi) r = kPi;
  return r;
}

/// Principal-branch arguments sorted by |theta| descending, ties by the
/// signed value descending.
class EigenphaseList {
 public:
  EigenphaseList() = default;

  static EigenphaseList from_angles(std::vector<double> angles) {
    for (double& a : angles) a = wrap_angle(a);
    std::sort(angles.begin(), angles.end(), [](double a, double b) {
      const double fa = std::abs(a), fb = std::abs(b);
      if (fa != fb) return fa > fb;
      return a > b;
    });
    EigenphaseList out;
    out.phases_ = std::move(angles);
    return out;
  }

  std::span<const double> phases() const noexcept { return phases_; }
  std::size_t size() const noexcept { return phases_.size(); }
  double operator[](std::size_t i) const { return phases_[i]; }

  friend bool operator==(const EigenphaseList&, const EigenphaseList&) = default;

 private:
  std::vector<double> phases_;
};

inline void check_square_finite(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw NonSquare("matrix must be square");
  if (m.rows() < 1) throw NonSquare("matrix must have dimension >= 1");
  if (!m.allFinite()) throw InvalidArgument("matrix entries must be finite");
}

/// Frobenius norm of M^dagger M - I.
inline double unitarity_defect(const ComplexMatrix& m) {
  const auto n = m.rows();
  return (m.adjoint() * m - ComplexMatrix::Identity(n, n)).norm();
}

class UnitaryMatrix;
UnitaryMatrix validate_unitary(const ComplexMatrix& m, double tol);

/// An n x n complex matrix that passed the unitarity check.
class UnitaryMatrix {
 public:
  const ComplexMatrix& matrix() const noexcept { return inner_; }
  Eigen::Index dim() const noexcept { return inner_.rows(); }
  double unitarity_defect() const noexcept { return defect_; }

  static UnitaryMatrix identity(Eigen::Index n) {
    return UnitaryMatrix(ComplexMatrix::Identity(n, n), 0.0);
  }

  friend UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("unitary product of different dimensions");
    ComplexMatrix prod = a.inner_ * b.inner_;
    return validate_unitary(prod, default_unitary_tol(prod.rows()));
  }

 private:
  UnitaryMatrix(ComplexMatrix m, double defect) : inner_(std::move(m)), defect_(defect) {}
  friend UnitaryMatrix validate_unitary(const ComplexMatrix& m, double tol);

  ComplexMatrix inner_;
  double defect_ = 0.0;
};

/// Accepts m iff ||m^dagger m - I||_F <= tol.
inline UnitaryMatrix validate_unitary(const ComplexMatrix& m, double tol) {
  check_square_finite(m);
  const double defect = unitarity_defect(m);
  if (!(defect <= tol)) throw NotUnitary(defect);
  return UnitaryMatrix(m, defect);
}

inline UnitaryMatrix validate_unitary(const ComplexMatrix& m) {
  check_square_finite(m);
  return validate_unitary(m, default_unitary_tol(m.rows()));
}

/// Eigenvalue arguments of U on the principal branch, with multiplicity.
///
/// The eigenvalues come from a general complex eigensolver and are projected
/// onto the unit circle before the argument is taken, so radial rounding noise
/// cannot move a phase across the branch cut.
inline EigenphaseList eigenphases(const UnitaryMatrix& u) {
  const ComplexMatrix& m = u.matrix();
  std::vector<double> angles;
  angles.reserve(static_cast<std::size_t>(m.rows()));
  if (m.rows() == 1) {
    angles.push_back(std::arg(m(0, 0) / std::abs(m(0, 0))));
    return EigenphaseList::from_angles(std::move(angles));
  }
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw EigenSolverFailure("complex eigensolver did not converge");
  for (const Complex& z : solver.eigenvalues()) {
    const double r = std::abs(z);
    if (!(r > 0.0) || !std::isfinite(r)) throw EigenSolverFailure("degenerate eigenvalue modulus");
    angles.push_back(std::arg(z / r));
  }
  return EigenphaseList::from_angles(std::move(angles));
}

/// U V^{-1} = U V^dagger.
inline UnitaryMatrix relative_operator(const UnitaryMatrix& u, const UnitaryMatrix& v) {
  if (u.dim() != v.dim()) throw DimensionMismatch("relative operator of different dimensions");
  ComplexMatrix r = u.matrix() * v.matrix().adjoint();
  return validate_unitary(r, default_unitary_tol(r.rows()));
}

/// e^{ix} U.
inline UnitaryMatrix phase_shift(const UnitaryMatrix& u, double x) {
  if (!std::isfinite(x)) throw InvalidArgument("phase shift must be finite");
  ComplexMatrix r = std::polar(1.0, x) * u.matrix();
  return validate_unitary(r, default_unitary_tol(r.rows()));
}

/// Haar-distributed U(n) sample drawn from `engine`: complex Ginibre matrix,
/// Householder QR, then the phases of diag(R) are moved into Q.
template <class Engine>
UnitaryMatrix haar_random_unitary(Eigen::Index n, Engine& engine) {
  if (n < 1) throw InvalidArgument("dimension must be >= 1");
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix z(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) {
      const double re = normal(engine);
      const double im = normal(engine);
      z(i, j) = Complex(re, im) * std::numbers::sqrt2 * 0.5;
    }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    q.col(j) *= (a > 0.0) ? d / a : Complex(1.0, 0.0);
  }
  return validate_unitary(q, default_unitary_tol(n));
}

/// Deterministic in (n, seed).
inline UnitaryMatrix haar_random_unitary(Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  return haar_random_unitary(n, engine);
}

}  // namespace qslm

#endif  // QSLM_UNITARY_HPP
