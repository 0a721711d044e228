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

#ifndef QSTWALK_LINALG_HPP_
#define QSTWALK_LINALG_HPP_

#include <complex>

#include <Eigen/Dense>

namespace qstwalk {

using Complex = std::complex<double>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixXc = Matrix<Complex>;
using VectorXc = Vector<Complex>;

/// Largest |entry| of a - b.
template <typename DerivedA, typename DerivedB>
double max_abs_diff(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
    if (a.size() == 0) return 0.0;
    return static_cast<double>((a - b).cwiseAbs().maxCoeff());
}

/// Largest |entry| of U^dagger U - I.
template <typename Derived>
double unitarity_residual(const Eigen::MatrixBase<Derived>& u) {
    using S = typename Derived::Scalar;
    Matrix<S> id = Matrix<S>::Identity(u.cols(), u.cols());
    return max_abs_diff(u.adjoint() * u, id);
}

}  // namespace qstwalk

#endif  // QSTWALK_LINALG_HPP_
