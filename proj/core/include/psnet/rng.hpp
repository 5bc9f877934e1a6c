#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>

namespace psnet {

// Identifies one reproducible Gaussian noise stream. Equal (seed, stream_index)
// pairs give bit-identical sequences; distinct stream indices give
// statistically independent streams. Sub-ensembles use stream_index = repeat
// index; module roles (e.g. matrix generation) use indices >= 2^32.
struct SeededStream {
    std::uint64_t seed = 0;
    std::uint64_t stream_index = 0;
};

constexpr std::uint64_t kMatrixStream = std::uint64_t(1) << 32;
constexpr std::uint64_t kScratchStream = (std::uint64_t(1) << 32) + 1;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Unit-variance real Gaussian stream: mt19937_64 keyed by splitmix64 mixing of
// (seed, stream_index), uniforms mapped to (0,1) via the top 53 bits, and the
// basic trigonometric Box-Muller transform consuming uniforms in pairs. The
// transform is fixed so that results are reproducible within one build.
class GaussianStream {
public:
    explicit GaussianStream(SeededStream s)
        : engine_(splitmix64(splitmix64(s.seed) ^ (0x9E3779B97F4A7C15ULL * (s.stream_index + 1)))) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * 3.14159265358979323846 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    void fill(std::span<double> out) {
        for (double& v : out) v = next();
    }

private:
    double uniform01() {
        // (0,1) exclusive: top 53 bits, offset by half an ulp
        return (double(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace psnet
