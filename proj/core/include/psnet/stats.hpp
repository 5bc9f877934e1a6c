#pragma once

#include <string>
#include <vector>

#include "psnet/counting.hpp"
#include "psnet/model.hpp"

namespace psnet {

struct ChiSquareReport {
    double chi2 = 0.0;
    long k_valid = 0;
    double chi2_per_k = 0.0;
    std::vector<Eigen::Index> excluded_bins;  // flat indices
};

// Reference to test a simulated distribution against. Exact references carry
// zero std_errors and event_count = 0; validity then falls back to the
// simulation's sample count.
struct ReferenceDistribution {
    std::vector<double> probabilities;
    std::vector<double> std_errors;
    long long event_count = 0;

    void validate() const;
};

// chi2 = sum over valid bins of (P_sim - P_ref)^2 / (sigma_ref^2 + sigma_sim^2).
// A bin is valid when the expected reference event count exceeds 10, using
// ref.event_count if positive and sim.meta.samples otherwise.
ChiSquareReport chi_square(const GroupedDistribution& sim, const ReferenceDistribution& ref);

// Total click counts of M independent thermal modes with occupation n:
// each mode clicks with p = 1 - 1/(1+n), totals are Binomial(M, p).
ReferenceDistribution exact_thermal_total(Eigen::Index modes, double n);

// Total click counts of independent (identity-network) Gaussian modes:
// p_j = 1 - [(1+n_j+m_j)(1+n_j-m_j)]^{-1/2}, totals are Poisson-binomial,
// computed by exact convolution of the Bernoulli factors.
ReferenceDistribution exact_independent_click_total(const std::vector<ModeSpec>& specs);

std::vector<double> poisson_binomial(const std::vector<double>& p);

double click_probability(const GaussianMoments& moments);

// mean of sub-ensemble means and its standard error (spread / sqrt(repeats))
Estimate subensemble_error(const std::vector<double>& values);

// Per-set Binomial/Poisson-binomial reference over a multi-set grouping of
// independent modes (outer product of the per-set totals).
ReferenceDistribution exact_independent_grouped(const std::vector<ModeSpec>& specs, const GroupedSpec& grouping);

void write_reference_csv(const std::string& path, const ReferenceDistribution& ref,
                         const std::vector<Eigen::Index>& shape);
ReferenceDistribution read_reference_csv(const std::string& path);

}  // namespace psnet
