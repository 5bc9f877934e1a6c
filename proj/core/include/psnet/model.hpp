#pragma once

#include <complex>
#include <vector>

#include "psnet/ordering.hpp"

namespace psnet {

enum class ModeKind { squeezed, thermal, vacuum };

// Single-mode Gaussian input: squeezed vacuum with decoherence fraction
// epsilon, a thermal mode, or vacuum.
struct ModeSpec {
    ModeKind kind = ModeKind::vacuum;
    double r = 0.0;          // squeezing parameter, >= 0
    double epsilon = 0.0;    // decoherence fraction in [0, 1], squeezed only
    double n_thermal = 0.0;  // mean occupation, thermal only

    static ModeSpec squeezed(double r, double epsilon = 0.0);
    static ModeSpec thermal(double n);
    static ModeSpec vacuum();

    void validate() const;
};

// Second-order moments of one mode: n = <a^dag a>, m_tilde = <a a> (real by
// convention; sign selects the squeezing axis), n_th = added thermal photons.
struct GaussianMoments {
    double n = 0.0;
    double m_tilde = 0.0;
    double n_th = 0.0;
};

// sigma-ordered quadrature standard deviations. The squares satisfy
//   dx^2 = 2(n + sigma + m_tilde),  dy^2 = 2(n + sigma - m_tilde),
// roots taken with non-negative real part. For sigma = 0 one of them is
// purely imaginary exactly when n < |m_tilde|.
struct SigmaVariances {
    std::complex<double> dx;
    std::complex<double> dy;

    std::complex<double> dx2() const { return dx * dx; }
    std::complex<double> dy2() const { return dy * dy; }
};

GaussianMoments moments_from_spec(const ModeSpec& spec);

SigmaVariances sigma_variances(const GaussianMoments& moments, Ordering ordering);

std::vector<GaussianMoments> moments_from_specs(const std::vector<ModeSpec>& specs);

}  // namespace psnet
