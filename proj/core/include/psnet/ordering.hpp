#pragma once

#include <string>

#include "psnet/errors.hpp"

namespace psnet {

// Operator-ordering parameter of the phase-space representation.
// sigma = 0 is normal ordering (positive-P), sigma = 1/2 symmetric (Wigner).
class Ordering {
public:
    static constexpr Ordering positive_p() { return Ordering(0.0); }
    static constexpr Ordering wigner() { return Ordering(0.5); }

    static Ordering from_sigma(double sigma) {
        if (sigma != 0.0 && sigma != 0.5) {
            throw ValidationError("ordering sigma must be 0 (positive-P) or 1/2 (Wigner), got " +
                                  std::to_string(sigma));
        }
        return Ordering(sigma);
    }

    static Ordering from_name(const std::string& name) {
        if (name == "positive-p" || name == "positive_p") return positive_p();
        if (name == "wigner") return wigner();
        throw ValidationError("unknown representation '" + name + "' (expected positive-p or wigner)");
    }

    constexpr double sigma() const { return sigma_; }
    constexpr bool is_wigner() const { return sigma_ == 0.5; }
    const char* name() const { return is_wigner() ? "wigner" : "positive-p"; }

    friend constexpr bool operator==(Ordering a, Ordering b) { return a.sigma_ == b.sigma_; }
    friend constexpr bool operator!=(Ordering a, Ordering b) { return a.sigma_ != b.sigma_; }

private:
    explicit constexpr Ordering(double sigma) : sigma_(sigma) {}
    double sigma_;
};

}  // namespace psnet
