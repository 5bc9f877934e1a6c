#pragma once

#include <vector>

#include "psnet/ensemble.hpp"
#include "psnet/model.hpp"
#include "psnet/rng.hpp"

namespace psnet {

// Product Gaussian input state: one ModeSpec per mode plus the representation
// the samples should be drawn in.
struct InputSpec {
    std::vector<ModeSpec> modes;
    Ordering ordering = Ordering::positive_p();

    Eigen::Index mode_count() const { return Eigen::Index(modes.size()); }
    void validate() const;

    static InputSpec uniform_thermal(Eigen::Index m, double n, Ordering ordering);
    static InputSpec uniform_squeezed(Eigen::Index m, double r, double epsilon, Ordering ordering);
    static InputSpec all_vacuum(Eigen::Index m, Ordering ordering);
};

struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
};

struct MomentEstimates {
    std::vector<Estimate> n;  // ordering-corrected photon number per mode
    std::vector<Estimate> m;  // anomalous coherence Re<a a> per mode
};

// Fills one sub-ensemble of `chunk` samples from per-mode sigma variances.
// Per sample, 2M unit Gaussians w are consumed in order (w_0..w_{M-1} for the
// x noises, w_M..w_{2M-1} for the y noises) and combined as
//   alpha_j = (dx_j w_j + i dy_j w_{j+M}) / 2
//   beta_j  = (dx_j w_j - i dy_j w_{j+M}) / 2.
void draw_block(const std::vector<SigmaVariances>& variances, Eigen::Index chunk, GaussianStream& noise,
                Eigen::Ref<CMatrix> alpha, Eigen::Ref<CMatrix> beta);

// Draws the full ensemble; sub-ensemble `rep` uses the independent stream
// (seed.seed, seed.stream_index + rep), so repeats are reproducible and can be
// generated in parallel or one block at a time with identical results.
Ensemble draw_input(const InputSpec& spec, const SubEnsembleLayout& layout, SeededStream seed,
                    int threads = 0);

// Per-mode (n, m) estimators with sub-ensemble standard errors. The photon
// number estimate is Re<beta alpha> - sigma so that it targets <a^dag a> in
// both representations.
MomentEstimates estimate_moments(const Ensemble& ens);

std::vector<SigmaVariances> variances_from_spec(const InputSpec& spec);

}  // namespace psnet
