#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qgabor/field.hpp"

namespace qgabor {

/// Space-frequency shift system {M_{beta n} T_{alpha m} g} truncated to
/// m in [m1_lo, m1_hi] x [m2_lo, m2_hi], n in [-n_range, n_range]^2.
/// The window lives on a periodic signal grid; translates by alpha must be
/// grid-aligned and the modulation step beta must land on the reciprocal
/// lattice (beta * L integer) so analysis can ride the fast transform.
struct GaborSystem {
    QField window;
    double alpha{1.0};
    double beta{1.0};
    std::int64_t m1_lo{0}, m1_hi{0};
    std::int64_t m2_lo{0}, m2_hi{0};
    std::int64_t n_range{0};

    std::int64_t m1_count() const { return m1_hi - m1_lo + 1; }
    std::int64_t m2_count() const { return m2_hi - m2_lo + 1; }
    std::int64_t n_count() const { return 2 * n_range + 1; }
    std::int64_t lattice_size() const {
        return m1_count() * m2_count() * n_count() * n_count();
    }
};

/// Builds a system whose translates cover the window's periodic domain once
/// (m over L/alpha consecutive integers per axis, anchored at the domain
/// origin). Throws when alpha or beta is incompatible with the grid.
GaborSystem make_gabor_system(const QField& window, double alpha, double beta,
                              std::int64_t n_range);

enum class CoefficientMode { Scalar, Quaternionic };

/// Analysis coefficients over the truncated lattice. Scalar mode stores the
/// real products <f, M_{beta n} T_{alpha m} g> of the symmetric scalar
/// product; quaternionic mode stores (f, M_{beta n} T_{alpha m} g), whose
/// scalar part is the scalar-mode value.
struct GaborCoefficients {
    CoefficientMode mode{CoefficientMode::Scalar};
    std::int64_t m1_lo{0}, m2_lo{0};
    std::int64_t m1_count{0}, m2_count{0};
    std::int64_t n_range{0};
    std::vector<Quaternion> values;  // scalar mode keeps only .w
    std::string warning;             // set when truncation looks too small

    std::size_t index(std::int64_t m1, std::int64_t m2, std::int64_t n1, std::int64_t n2) const {
        const std::int64_t nc = 2 * n_range + 1;
        return static_cast<std::size_t>(
            (((m1 - m1_lo) * m2_count + (m2 - m2_lo)) * nc + (n1 + n_range)) * nc +
            (n2 + n_range));
    }
    const Quaternion& at(std::int64_t m1, std::int64_t m2, std::int64_t n1,
                         std::int64_t n2) const {
        return values[index(m1, m2, n1, n2)];
    }

    double sum_sq() const;
};

GaborCoefficients analysis(const QField& f, const GaborSystem& sys, CoefficientMode mode);

/// Synthesis sum_{m,n} c_{m,n} exp(2 pi i beta n1 x1) g(x - alpha m)
/// exp(2 pi j beta n2 x2); quaternionic coefficients multiply from the left.
QField synthesis(const GaborCoefficients& c, const GaborSystem& sys);

/// Frame-type operator S f = synthesis(analysis(f)). Quaternionic mode is
/// the default: with scalar coefficients the operator annihilates signal
/// components that are odd against the window's modulation cosines, so only
/// the quaternionic coefficients reproduce the identity on the box system.
QField frame_apply(const QField& f, const GaborSystem& sys,
                   CoefficientMode mode = CoefficientMode::Quaternionic);

struct FrameBoundsEstimate {
    double A{0.0};
    double B{0.0};
    std::string method;    // "empirical" or "zak"
    std::int64_t trials{0};
    std::uint64_t seed{0};
    std::string metadata;  // truncation / grid provenance
};

/// Rayleigh-quotient bounds min/max of sum |c|^2 / ||f||^2 over seeded random
/// probes plus deterministic probes (the window, a shifted and a modulated
/// copy, and a Zak-zero-localized probe). Reproducible for a fixed seed.
FrameBoundsEstimate empirical_frame_bounds(const GaborSystem& sys, std::int64_t trials,
                                           std::uint64_t seed);

}  // namespace qgabor
