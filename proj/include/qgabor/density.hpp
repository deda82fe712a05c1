#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qgabor/window.hpp"
#include "qgabor/zak.hpp"

namespace qgabor {

/// One grid sweep of alpha^2 |Z g|^2 with its provenance.
struct ZakBoundsLevel {
    std::int64_t r{0}, s{0}, trunc{0};
    double A{0.0}, B{0.0};
    std::array<double, 4> min_location{};  // (x1, x2, w1, w2)
    std::array<double, 4> max_location{};
};

/// Certified extrema alpha^2 min/max |Z^alpha g|^2 over the grid on
/// Q_alpha x Q_{1/alpha}, with optional dyadic refinement history.
struct ZakFrameBounds {
    double A{0.0}, B{0.0};
    std::string window;
    bool window_normalized{false};
    double alpha{1.0};
    std::vector<ZakBoundsLevel> levels;  // coarsest first; A, B come from the finest
};

/// Grid extrema of alpha^2 |Z g|^2. When refine_steps > 0, doubles (r, s)
/// until the bound change drops below 1e-4 or the step budget runs out.
/// Box windows are rescaled to unit L2 norm first: the optimal-bound and
/// orthonormal-basis criteria compare |Z g|^2 against alpha^{-2}, which
/// pins ||g|| = 1; the Gaussian is certified in its fixed form exp(-pi x^2).
ZakFrameBounds optimal_frame_bounds(const WindowSpec& g, double alpha, std::int64_t r,
                                    std::int64_t s, std::int64_t trunc,
                                    std::int64_t refine_steps = 0);

struct DecisionThresholds {
    double onb_tol{1e-6};
    double frame_min_A{1e-4};
    double zero_A{1e-6};
    double stable_rel{1e-2};  // relative A drift between the last two refinements
};

struct GaussianZeroReport {
    Quaternion value{};
    bool paired_cancellation{false};
    std::int64_t trunc{0};
    double alpha{1.0};
    std::int64_t range_lo{0}, range_hi{0};
    double max_pair_defect{0.0};
};

struct FrameDecision {
    std::string verdict;  // frame | not_frame | onb | inconclusive
    double A{0.0}, B{0.0};
    ZakFrameBounds bounds;
    bool analytic_zero_certificate{false};
    GaussianZeroReport zero_report;  // populated for gaussian windows
    DecisionThresholds thresholds;
};

/// Verdict for G(g, alpha, 1/alpha) from the Zak modulus: onb when
/// alpha^2 |Z g|^2 stays within onb_tol of 1 on the finest grid; not_frame
/// on an analytic zero certificate (gaussian) or a vanishing, shrinking A;
/// frame for a stable A above frame_min_A; inconclusive otherwise.
FrameDecision frame_decision(const WindowSpec& g, double alpha,
                             const DecisionThresholds& thresholds = {},
                             std::int64_t base_r = 8, std::int64_t base_s = 8,
                             std::int64_t trunc = 10, std::int64_t refinements = 2);

/// Z of exp(-pi x^2) at x = (alpha/2, alpha/2), w = (1/2alpha, 1/2alpha)
/// over the pair-complete range {-M, ..., M+1}. paired_cancellation is true
/// when every (m, 1-m) pair of the per-axis sums cancels below 1e-15.
GaussianZeroReport gaussian_zak_critical_value(double alpha, std::int64_t trunc);

/// Negative control: same evaluation with index -1 removed from both axis
/// ranges {-M..M}, which orphans the partner term and leaves a nonzero value.
GaussianZeroReport gaussian_zak_critical_value_pair_broken(double alpha, std::int64_t trunc);

struct ContinuityReport {
    double max_variation{0.0};
    std::int64_t pairs_used{0};
};

/// Sampled modulus of continuity of Z g over the cube: max |Zg(p) - Zg(p')|
/// over a seeded pool of point pairs, restricted to separations <= delta.
/// The pool is drawn at a fixed scale, so shrinking delta filters a subset.
ContinuityReport continuity_modulus_probe(const WindowSpec& g, double alpha, double delta,
                                          std::int64_t samples, std::uint64_t seed = 12345,
                                          std::int64_t trunc = 10);

}  // namespace qgabor
