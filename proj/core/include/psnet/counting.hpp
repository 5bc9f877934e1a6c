#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "psnet/ensemble.hpp"

namespace psnet {

// Disjoint output-mode sets S_1..S_g whose click totals are binned together,
// with the count-resolving angle theta_j = 2*pi/(M_j + 1) per set.
struct GroupedSpec {
    std::vector<std::vector<Eigen::Index>> sets;

    static GroupedSpec single_set(Eigen::Index modes);
    static GroupedSpec equal_split(Eigen::Index modes, int groups);

    std::size_t group_count() const { return sets.size(); }
    Eigen::Index set_size(std::size_t j) const { return Eigen::Index(sets[j].size()); }
    double angle(std::size_t j) const;
    Eigen::Index total_modes() const;

    // bin-array dimensions (M_j + 1 per set) and row-major indexing
    std::vector<Eigen::Index> shape() const;
    Eigen::Index bin_count() const;

    void validate(Eigen::Index ensemble_modes) const;
    std::string describe() const;
};

struct DistributionMeta {
    long long samples = 0;
    Eigen::Index repeats = 0;
    Eigen::Index chunk = 0;
    std::string representation;
    std::string grouping;
    std::uint64_t seed = 0;
    bool has_seed = false;
    double max_imag_residue = 0.0;  // largest |Im| discarded when taking the real part
    std::string command;            // reproduction command, embedded in output files
};

// g-dimensional grouped count probabilities with per-bin standard errors,
// stored flat in row-major order over the shape (M_1+1, ..., M_g+1).
struct GroupedDistribution {
    std::vector<Eigen::Index> shape;
    std::vector<double> probabilities;
    std::vector<double> std_errors;
    DistributionMeta meta;

    Eigen::Index flat_index(const std::vector<Eigen::Index>& multi) const;
    std::vector<Eigen::Index> multi_index(Eigen::Index flat) const;
    double total() const;

    // sums over all axes except `axis`
    std::vector<double> marginal(std::size_t axis) const;
};

// Click-detector weights for one mode with phase-space photon number n':
// pi0 = exp(-n'), pi1 = 1 - exp(-n'). They sum to one exactly; either may be
// complex or negative for nonclassical inputs.
struct ClickEstimators {
    std::complex<double> pi0;
    std::complex<double> pi1;
};

inline ClickEstimators click_estimators(std::complex<double> n_prime) {
    const std::complex<double> pi0 = std::exp(-n_prime);
    return {pi0, 1.0 - pi0};
}

// Per-sub-ensemble accumulator of the Fourier observable
//   F(k) = prod_j prod_{i in S_j} (pi_i(0) + pi_i(1) e^{-i k_j theta_j}),
// summed in extended precision over the samples it is fed.
class FourierAccumulator {
public:
    FourierAccumulator() = default;
    explicit FourierAccumulator(const GroupedSpec& spec);

    void add_samples(Eigen::Ref<const CMatrix> alpha, Eigen::Ref<const CMatrix> beta);

    long long count() const { return count_; }

    // mean Fourier observable over the fed samples
    std::vector<std::complex<double>> mean() const;

    // inverse DFT of mean(): complex grouped count probabilities of this
    // sub-ensemble, row-major over spec.shape()
    std::vector<std::complex<double>> distribution() const;

private:
    const GroupedSpec* spec_ = nullptr;
    std::vector<std::vector<std::complex<double>>> phases_;  // per set: e^{-i k theta}
    std::vector<std::complex<long double>> sums_;
    std::vector<std::vector<std::complex<double>>> factor_scratch_;
    std::vector<std::complex<double>> pi0_scratch_, pi1_scratch_;
    long long count_ = 0;
};

// Combines per-sub-ensemble complex distributions: probabilities are the real
// part of the mean, standard errors come from the sub-ensemble spread, and the
// discarded imaginary residue is recorded in meta.
GroupedDistribution finalize_grouped(const GroupedSpec& spec,
                                     const std::vector<std::vector<std::complex<double>>>& per_rep,
                                     DistributionMeta meta);

// Reconstructs grouped count probabilities by the multidimensional inverse
// DFT over the Fourier observable. Requires a normally ordered (sigma = 0)
// ensemble.
GroupedDistribution grouped_probability(const Ensemble& ens, const GroupedSpec& spec, int threads = 0);

// Same estimand by explicit enumeration of the 2^n click patterns
// (n = sum M_j <= 16): the desk-scale oracle for the DFT route.
GroupedDistribution grouped_probability_bruteforce(const Ensemble& ens, const GroupedSpec& spec);

constexpr Eigen::Index kBruteforceModeCap = 16;

// CSV contract: '#' metadata lines, header m_1,...,m_g,probability,std_error.
void write_distribution_csv(const std::string& path, const GroupedDistribution& dist);
GroupedDistribution read_distribution_csv(const std::string& path);

}  // namespace psnet
