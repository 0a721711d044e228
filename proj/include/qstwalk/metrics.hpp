// Copyright 2026 The qstwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSTWALK_METRICS_HPP_
#define QSTWALK_METRICS_HPP_

#include <algorithm>
#include <cmath>
#include <numeric>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "qstwalk/linalg.hpp"

namespace qstwalk {

struct InvalidStateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Tolerances used when accepting a density matrix as input.
inline constexpr double kStateTolerance = 1e-10;

/// Fidelity values F_1..F_T; values[t-1] holds F_t.
struct FidelitySeries {
    std::vector<double> values;

    int horizon() const { return static_cast<int>(values.size()); }
    double at(int t) const { return values.at(t - 1); }
};

template <typename Derived>
Matrix<typename Derived::Scalar> density_matrix(const Eigen::MatrixBase<Derived>& psi) {
    return psi * psi.adjoint();
}

/// Throws InvalidStateError unless rho is square, Hermitian, unit trace and
/// positive semidefinite (all within kStateTolerance).
template <typename Derived>
void check_density_matrix(const Eigen::MatrixBase<Derived>& rho, double tol = kStateTolerance) {
    if (rho.rows() != rho.cols()) throw InvalidStateError("density matrix is not square");
    if (max_abs_diff(rho, rho.adjoint()) > tol) throw InvalidStateError("density matrix is not Hermitian");
    const double trace_err = std::abs(rho.trace() - typename Derived::Scalar(1));
    if (trace_err > tol) throw InvalidStateError("density matrix trace deviates from 1 by " + std::to_string(trace_err));
    Matrix<typename Derived::Scalar> herm = (rho + rho.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<decltype(herm)> es(herm, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tol) throw InvalidStateError("density matrix has a negative eigenvalue");
}

template <typename Derived>
bool is_density_matrix(const Eigen::MatrixBase<Derived>& rho, double tol = kStateTolerance) {
    try {
        check_density_matrix(rho, tol);
        return true;
    } catch (const InvalidStateError&) {
        return false;
    }
}

/// |<a|b>|^2.
template <typename DerivedA, typename DerivedB>
double fidelity_pure(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("fidelity_pure: dimension mismatch");
    return std::norm(a.dot(b));
}

namespace detail {

// Principal square root of a PSD Hermitian matrix, clipping tiny negative
// eigenvalues.
template <typename Scalar>
Matrix<Scalar> psd_sqrt(const Matrix<Scalar>& m) {
    Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> es(m);
    // Eigenvalues at rounding level are zeroed; their square roots would be ~1e-8.
    const double floor = 64 * std::numeric_limits<double>::epsilon() * m.rows() *
                         std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    auto lambda = (es.eigenvalues().array() > floor).select(es.eigenvalues().array(), 0.0).sqrt().matrix();
    return es.eigenvectors() * lambda.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace detail

/// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, evaluated as the
/// squared nuclear norm of sqrt(rho) sqrt(sigma).
template <typename DerivedA, typename DerivedB>
double fidelity_mixed(const Eigen::MatrixBase<DerivedA>& rho, const Eigen::MatrixBase<DerivedB>& sigma) {
    using Scalar = typename DerivedA::Scalar;
    if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
        throw std::invalid_argument("fidelity_mixed: dimension mismatch");
    }
    check_density_matrix(rho);
    check_density_matrix(sigma);
    Matrix<Scalar> rho_h = (rho + rho.adjoint()) / 2.0;
    Matrix<Scalar> sigma_h = (sigma + sigma.adjoint()) / 2.0;
    const Matrix<Scalar> product = detail::psd_sqrt(rho_h) * detail::psd_sqrt(sigma_h);
    const double tr = Eigen::JacobiSVD<Matrix<Scalar>>(product).singularValues().sum();
    return std::clamp(tr * tr, 0.0, 1.0);
}

/// <psi|rho|psi>; equals fidelity_mixed(rho, |psi><psi|) for normalized psi.
template <typename DerivedRho, typename DerivedPsi>
double fidelity_with_pure(const Eigen::MatrixBase<DerivedRho>& rho, const Eigen::MatrixBase<DerivedPsi>& psi) {
    if (rho.cols() != psi.size()) throw std::invalid_argument("fidelity_with_pure: dimension mismatch");
    return std::real(psi.dot(rho * psi));
}

inline double average_fidelity(const FidelitySeries& series) {
    if (series.values.empty()) throw std::invalid_argument("average_fidelity: empty series");
    return std::accumulate(series.values.begin(), series.values.end(), 0.0) / series.horizon();
}

/// Sum of |rho_ij| over i != j.
template <typename Derived>
double coherence_l1(const Eigen::MatrixBase<Derived>& state) {
    if (state.cols() == 1) {
        // |psi_i||psi_j| summed off the diagonal, without forming |psi><psi|.
        auto mags = state.cwiseAbs();
        const double s = mags.sum();
        return std::max(0.0, s * s - mags.squaredNorm());
    }
    double total = state.cwiseAbs().sum() - state.diagonal().cwiseAbs().sum();
    return std::max(0.0, total);
}

}  // namespace qstwalk

#endif  // QSTWALK_METRICS_HPP_
