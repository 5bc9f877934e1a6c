#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "psnet/ensemble.hpp"
#include "psnet/rng.hpp"

namespace psnet {

constexpr double kUnitaryTolerance = 1e-10;

// M x M complex transmission matrix of the linear network, with cached
// unitarity metadata. Non-unitary matrices load fine (lossy networks); they
// are only rejected where the representation requires unitarity.
class TransmissionMatrix {
public:
    TransmissionMatrix() = default;
    explicit TransmissionMatrix(Eigen::MatrixXcd entries);

    static TransmissionMatrix identity(Eigen::Index m);

    const Eigen::MatrixXcd& entries() const { return entries_; }
    Eigen::Index modes() const { return entries_.rows(); }

    // max-norm of T^dag T - I
    double unitarity_deviation() const { return unitarity_deviation_; }
    bool is_unitary(double tolerance = kUnitaryTolerance) const { return unitarity_deviation_ <= tolerance; }

    // flagged (not rejected): sigma_max > 1 means the file encodes gain
    double max_singular_value() const { return max_singular_value_; }

private:
    Eigen::MatrixXcd entries_;
    double unitarity_deviation_ = 0.0;
    double max_singular_value_ = 0.0;
};

// Chain of M-1 two-mode splitters; the defaults R_1^2 = 1/2 and
// R_{M-j}^2 = 1/(j+1) for j < M-1 distribute one EPR pair across M modes.
struct BeamSplitterChainSpec {
    Eigen::Index modes = 0;
    std::vector<double> reflectivities;  // amplitudes R_i in (0,1), size M-1

    static BeamSplitterChainSpec with_default_reflectivities(Eigen::Index m);
    void validate() const;
};

// Text format: '#' comment lines; "M N" header; then M rows of 2N floats,
// re im interleaved. Written with 17 significant digits.
TransmissionMatrix load_matrix(const std::string& path);
void save_matrix(const std::string& path, const TransmissionMatrix& matrix,
                 const std::vector<std::string>& comments = {});

// alpha' = T alpha, beta' = conj(T) beta, per sample. A Wigner ensemble
// requires a unitary T; the lossy-Wigner noise corrections are out of scope.
Ensemble apply(const TransmissionMatrix& matrix, const Ensemble& ens, int threads = 0);

// In-place transform of one sub-ensemble block (rows = samples).
void apply_block(const TransmissionMatrix& matrix, Eigen::Ref<CMatrix> alpha, Eigen::Ref<CMatrix> beta,
                 Ordering ordering);

// Haar-distributed random unitary via complex Ginibre QR with the phase fix
// that makes the distribution left-invariant.
TransmissionMatrix haar_unitary(Eigen::Index m, SeededStream seed);

// Real orthogonal matrix of the splitter chain: BS_k mixes modes (k, k+1) with
// [[R_k, T_k], [T_k, -R_k]], applied in order k = 1..M-1.
TransmissionMatrix bs_chain_matrix(const BeamSplitterChainSpec& spec);

}  // namespace psnet
