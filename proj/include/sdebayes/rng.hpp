#pragma once

#include <cstdint>
#include <random>

namespace sdebayes {

/// Derives the seed of an independent sub-stream from a master seed.
///
/// Stream seeds are produced by running SplitMix64 on
/// `master + (stream + 1) * golden_gamma`, the standard counter scheme for
/// splitting one 64-bit seed into decorrelated streams. Every component that
/// needs its own noise source (covariate l, replicate r, restart k, ...)
/// calls this with a distinct stream index, so results are reproducible and
/// independent of evaluation order.
inline std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t z = master + (stream + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Seeded generator producing uniforms and normals.
///
/// Normals come from Box-Muller over the mt19937_64 stream (not
/// std::normal_distribution, whose output is implementation defined), so a
/// seed pins the exact sample sequence.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform on [0, 1) with 53-bit resolution.
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        // u1 in (0,1] so the log is finite.
        double u1 = 1.0 - uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    double normal(double mean, double sd) { return mean + sd * normal(); }

    /// Integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // Rejection-free modulo is fine here; n is always tiny compared to 2^64.
        return gen_() % n;
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace sdebayes
