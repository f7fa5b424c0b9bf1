#pragma once

#include <cstdint>
#include <random>

#include "twistor/quaternion.hpp"

namespace twistor {

/// Seeded random source for property sweeps. Gaussians are produced by a
/// hand-rolled Box-Muller transform so that streams depend only on the seed,
/// not on the standard library's distribution internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() {  // [0, 1)
        return (engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u = 0.0;
        do {
            u = uniform();
        } while (u <= 0.0);
        const double v = uniform();
        const double r = std::sqrt(-2.0 * std::log(u));
        const double a = 2.0 * M_PI * v;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    Quaternion quaternion() { return {gaussian(), gaussian(), gaussian(), gaussian()}; }

    Quaternion unit_quaternion() {
        Quaternion q;
        do {
            q = quaternion();
        } while (q.norm() < 1e-6);
        return q.normalized();
    }

    Quaternion unit_imaginary_quaternion() {
        Quaternion q;
        do {
            q = Quaternion(0, gaussian(), gaussian(), gaussian());
        } while (q.norm() < 1e-6);
        return q.normalized();
    }

    std::complex<double> complex_gaussian() { return {gaussian(), gaussian()}; }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace twistor
