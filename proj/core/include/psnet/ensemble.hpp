#pragma once

#include <complex>

#include <Eigen/Core>

#include "psnet/errors.hpp"
#include "psnet/ordering.hpp"

namespace psnet {

// Samples x modes, one row per phase-space sample. Row-major so that a
// sub-ensemble is a contiguous block of rows.
using CMatrix = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using CVector = Eigen::VectorXcd;

// repeats independent sub-ensembles of chunk samples each; the spread of
// sub-ensemble means is the sampling-error estimate.
struct SubEnsembleLayout {
    Eigen::Index repeats = 0;
    Eigen::Index chunk = 0;

    Eigen::Index samples() const { return repeats * chunk; }

    void validate() const {
        if (repeats < 2)
            throw ValidationError("insufficient sub-ensembles for error estimation (repeats >= 2 required)");
        if (chunk < 1) throw ValidationError("sub-ensemble chunk must be >= 1");
    }
};

// Phase-space state of the simulation: paired (alpha, beta) sample arrays in a
// fixed ordering. For the Wigner representation beta == conj(alpha) row by row.
// Immutable by convention after construction.
struct Ensemble {
    CMatrix alpha;
    CMatrix beta;
    Ordering ordering = Ordering::positive_p();
    SubEnsembleLayout layout;

    Eigen::Index samples() const { return alpha.rows(); }
    Eigen::Index modes() const { return alpha.cols(); }

    auto alpha_rep(Eigen::Index rep) const { return alpha.middleRows(rep * layout.chunk, layout.chunk); }
    auto beta_rep(Eigen::Index rep) const { return beta.middleRows(rep * layout.chunk, layout.chunk); }

    void validate() const;
};

}  // namespace psnet
