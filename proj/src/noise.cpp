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

#include "qstwalk/noise.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qstwalk {

std::string_view to_string(NoiseFamily family) {
    switch (family) {
        case NoiseFamily::none: return "none";
        case NoiseFamily::rtn: return "rtn";
        case NoiseFamily::oun: return "oun";
        case NoiseFamily::nmad: return "nmad";
    }
    return "none";
}

NoiseFamily parse_noise_family(std::string_view name) {
    for (NoiseFamily f : {NoiseFamily::none, NoiseFamily::rtn, NoiseFamily::oun, NoiseFamily::nmad}) {
        if (name == to_string(f)) return f;
    }
    throw std::invalid_argument("unknown noise family '" + std::string(name) + "'");
}

namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw std::invalid_argument(std::string(name) + " must be positive, got " + std::to_string(value));
    }
}

void require_time(double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("noise time must be >= 0");
}

void check_dim(int d) {
    if (d < 1) throw std::invalid_argument("channel dimension must be >= 1");
}

KrausSet dephasing_pair(double coefficient, double t, int d) {
    KrausSet k;
    k.t = t;
    k.operators.push_back(std::sqrt((1.0 + coefficient) / 2.0) * weyl(0, 0, d));
    k.operators.push_back(std::sqrt((1.0 - coefficient) / 2.0) * weyl(1 % d, 0, d));
    return k;
}

double clamp_checked(double value, double lo, double hi, const char* name, double t) {
    return clamp_coefficient(value, lo, hi, std::string(name) + "(" + std::to_string(t) + ")");
}

}  // namespace

double clamp_coefficient(double value, double lo, double hi, const std::string& what) {
    if (!std::isfinite(value) || value < lo - kCoefficientSlack || value > hi + kCoefficientSlack) {
        throw NumericDomainError(what + " = " + std::to_string(value) + " is outside [" + std::to_string(lo) + ", " +
                                 std::to_string(hi) + "]");
    }
    return std::clamp(value, lo, hi);
}

void NoiseSpec::validate() const {
    switch (family) {
        case NoiseFamily::none: break;
        case NoiseFamily::rtn:
            require_positive(rtn.a, "rtn.a");
            require_positive(rtn.gamma, "rtn.gamma");
            break;
        case NoiseFamily::oun:
            require_positive(oun.lambda, "oun.lambda");
            require_positive(oun.gamma, "oun.gamma");
            break;
        case NoiseFamily::nmad:
            require_positive(nmad.g, "nmad.g");
            require_positive(nmad.gamma, "nmad.gamma");
            break;
    }
}

double rtn_coefficient(const RtnParams& p, double t) {
    require_positive(p.a, "rtn.a");
    require_positive(p.gamma, "rtn.gamma");
    require_time(t);
    const double ratio = 2.0 * p.a / p.gamma;
    const double radicand = ratio * ratio - 1.0;
    const double gt = p.gamma * t;
    double value;
    if (radicand > 0.0) {
        const double nu = std::sqrt(radicand);
        value = std::exp(-gt) * (std::cos(nu * gt) + std::sin(nu * gt) / nu);
    } else if (radicand < 0.0) {
        // e^{-gt}[cosh(x) + sinh(x)/nu] split into decaying exponentials (nu < 1).
        const double nu = std::sqrt(-radicand);
        value = 0.5 * (std::exp((nu - 1.0) * gt) * (1.0 + 1.0 / nu) + std::exp(-(nu + 1.0) * gt) * (1.0 - 1.0 / nu));
    } else {
        value = std::exp(-gt) * (1.0 + gt);
    }
    return clamp_checked(value, -1.0, 1.0, "rtn Lambda", t);
}

double oun_coefficient(const OunParams& p, double t) {
    require_positive(p.lambda, "oun.lambda");
    require_positive(p.gamma, "oun.gamma");
    require_time(t);
    // expm1 keeps the small-t regime accurate.
    const double exponent = -(p.lambda / 2.0) * (t + std::expm1(-p.gamma * t) / p.gamma);
    return clamp_checked(std::exp(exponent), 0.0, 1.0, "oun P", t);
}

double nmad_coefficient(const NmadParams& p, double t) {
    require_positive(p.g, "nmad.g");
    require_positive(p.gamma, "nmad.gamma");
    require_time(t);
    const double radicand = p.g * p.g - 2.0 * p.gamma * p.g;
    // envelope = e^{-gt/2}[(g/l) sinh(lt/2) + cosh(lt/2)], so lambda = 1 - envelope^2.
    double envelope;
    if (radicand > 0.0) {
        // Split into decaying exponentials (l < g).
        const double l = std::sqrt(radicand);
        envelope = 0.5 * (std::exp((l - p.g) * t / 2.0) * (1.0 + p.g / l) +
                          std::exp(-(l + p.g) * t / 2.0) * (1.0 - p.g / l));
    } else if (radicand < 0.0) {
        const double l = std::sqrt(-radicand);
        envelope = std::exp(-p.g * t / 2.0) * ((p.g / l) * std::sin(l * t / 2.0) + std::cos(l * t / 2.0));
    } else {
        envelope = std::exp(-p.g * t / 2.0) * (1.0 + p.g * t / 2.0);
    }
    return clamp_checked(1.0 - envelope * envelope, 0.0, 1.0, "nmad lambda", t);
}

MatrixXc weyl(int u, int v, int d) {
    check_dim(d);
    if (u < 0 || u >= d || v < 0 || v >= d) {
        throw std::invalid_argument("weyl: indices (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") out of range for d=" + std::to_string(d));
    }
    MatrixXc w = MatrixXc::Zero(d, d);
    for (int k = 0; k < d; ++k) {
        // Reduce ku mod d first so the phase argument stays small.
        const double angle = 2.0 * std::numbers::pi * static_cast<double>((static_cast<long>(k) * u) % d) / d;
        w(k, (k + v) % d) = std::polar(1.0, angle);
    }
    return w;
}

KrausSet identity_kraus(int d) {
    check_dim(d);
    KrausSet k;
    k.operators.push_back(MatrixXc::Identity(d, d));
    return k;
}

KrausSet rtn_kraus(const RtnParams& p, double t, int d) {
    check_dim(d);
    return dephasing_pair(rtn_coefficient(p, t), t, d);
}

KrausSet oun_kraus(const OunParams& p, double t, int d) {
    check_dim(d);
    return dephasing_pair(oun_coefficient(p, t), t, d);
}

KrausSet nmad_kraus(const NmadParams& p, double t, int d) {
    check_dim(d);
    const double lambda = nmad_coefficient(p, t);
    KrausSet k;
    k.t = t;
    MatrixXc k1 = MatrixXc::Identity(d, d) * std::sqrt(1.0 - lambda);
    k1(0, 0) = 1.0;
    k.operators.push_back(std::move(k1));
    for (int j = 1; j < d; ++j) {
        MatrixXc kj = MatrixXc::Zero(d, d);
        kj(0, j) = std::sqrt(lambda);
        k.operators.push_back(std::move(kj));
    }
    return k;
}

KrausSet kraus_at(const NoiseSpec& spec, double t, int d) {
    switch (spec.family) {
        case NoiseFamily::rtn: return rtn_kraus(spec.rtn, t, d);
        case NoiseFamily::oun: return oun_kraus(spec.oun, t, d);
        case NoiseFamily::nmad: return nmad_kraus(spec.nmad, t, d);
        case NoiseFamily::none: break;
    }
    KrausSet k = identity_kraus(d);
    k.t = t;
    return k;
}

double validate_cptp(const KrausSet& k) {
    const int d = k.dim();
    MatrixXc sum = MatrixXc::Zero(d, d);
    for (const auto& op : k.operators) sum.noalias() += op.adjoint() * op;
    return max_abs_diff(sum, MatrixXc::Identity(d, d));
}

MatrixXc apply_channel(const KrausSet& k, const VectorXc& psi) {
    if (k.dim() != psi.size()) throw std::invalid_argument("apply_channel: dimension mismatch");
    MatrixXc rho = MatrixXc::Zero(psi.size(), psi.size());
    VectorXc branch(psi.size());
    for (const auto& op : k.operators) {
        branch.noalias() = op * psi;
        rho.noalias() += branch * branch.adjoint();
    }
    return rho;
}

MatrixXc apply_channel(const KrausSet& k, const MatrixXc& rho) {
    if (k.dim() != rho.rows() || rho.rows() != rho.cols()) {
        throw std::invalid_argument("apply_channel: dimension mismatch");
    }
    MatrixXc out = MatrixXc::Zero(rho.rows(), rho.cols());
    for (const auto& op : k.operators) out.noalias() += op * rho * op.adjoint();
    return out;
}

}  // namespace qstwalk
