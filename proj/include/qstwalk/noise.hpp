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

#ifndef QSTWALK_NOISE_HPP_
#define QSTWALK_NOISE_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qstwalk/linalg.hpp"

namespace qstwalk {

/// A channel coefficient left its admissible range by more than rounding.
struct NumericDomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Slack allowed on decoherence coefficients before they are clamped.
inline constexpr double kCoefficientSlack = 1e-9;

/// Clamps `value` into [lo, hi] if it lies within kCoefficientSlack of the
/// interval; otherwise (or if non-finite) throws NumericDomainError.
double clamp_coefficient(double value, double lo, double hi, const std::string& what);

enum class NoiseFamily { none, rtn, oun, nmad };

std::string_view to_string(NoiseFamily family);
/// Throws std::invalid_argument for unknown names.
NoiseFamily parse_noise_family(std::string_view name);

/// Random telegraph noise: coupling strength `a`, fluctuation rate `gamma`.
struct RtnParams {
    double a = 0.1;
    double gamma = 0.01;
};

/// Modified Ornstein-Uhlenbeck noise.
struct OunParams {
    double lambda = 1.0;
    double gamma = 0.05;
};

/// Non-Markovian amplitude damping: spectral width `g`, emission rate `gamma`.
struct NmadParams {
    double g = 0.001;
    double gamma = 5.0;
};

struct NoiseSpec {
    NoiseFamily family = NoiseFamily::none;
    RtnParams rtn;
    OunParams oun;
    NmadParams nmad;

    /// Throws std::invalid_argument if the active family has a non-positive
    /// parameter.
    void validate() const;
};

/// RTN shows memory (information backflow) when a/gamma > 0.5.
inline bool is_non_markovian(const RtnParams& p) { return p.a / p.gamma > 0.5; }

/// Lambda(t) = e^{-gamma t}[cos(nu gamma t) + sin(nu gamma t)/nu],
/// nu = sqrt((2a/gamma)^2 - 1), continued analytically when nu is imaginary.
double rtn_coefficient(const RtnParams& p, double t);

/// P(t) = exp(-(lambda/2)(t + (e^{-gamma t} - 1)/gamma)).
double oun_coefficient(const OunParams& p, double t);

/// lambda(t) = 1 - e^{-g t}[(g/l) sinh(l t/2) + cosh(l t/2)]^2,
/// l = sqrt(g^2 - 2 gamma g), continued analytically when l is imaginary.
double nmad_coefficient(const NmadParams& p, double t);

/// Weyl operator U_{u,v} = sum_k e^{2 pi i k u/d} |k><(k+v) mod d|.
MatrixXc weyl(int u, int v, int d);

struct KrausSet {
    std::vector<MatrixXc> operators;
    double t = 0.0;

    int dim() const { return operators.empty() ? 0 : static_cast<int>(operators.front().rows()); }
};

KrausSet identity_kraus(int d);
KrausSet rtn_kraus(const RtnParams& p, double t, int d);
KrausSet oun_kraus(const OunParams& p, double t, int d);
KrausSet nmad_kraus(const NmadParams& p, double t, int d);

/// Kraus set of the active family at time t; identity for NoiseFamily::none.
KrausSet kraus_at(const NoiseSpec& spec, double t, int d);

/// Max-entry norm of sum_i K_i^dagger K_i - I.
double validate_cptp(const KrausSet& k);

/// sum_i K_i |psi><psi| K_i^dagger.
MatrixXc apply_channel(const KrausSet& k, const VectorXc& psi);
/// sum_i K_i rho K_i^dagger.
MatrixXc apply_channel(const KrausSet& k, const MatrixXc& rho);

}  // namespace qstwalk

#endif  // QSTWALK_NOISE_HPP_
