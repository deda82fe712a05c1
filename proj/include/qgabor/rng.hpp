#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "qgabor/quaternion.hpp"

namespace qgabor {

/// Seeded generator with hand-rolled distributions so that byte-identical
/// reports do not depend on standard-library distribution internals.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 1e-300) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    Quaternion quaternion(double scale = 1.0) {
        return {scale * normal(), scale * normal(), scale * normal(), scale * normal()};
    }

private:
    std::mt19937_64 eng_;
    bool have_spare_{false};
    double spare_{0.0};
};

}  // namespace qgabor
