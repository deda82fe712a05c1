#include "qgabor/gabor.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qgabor/parallel.hpp"
#include "qgabor/qft.hpp"
#include "qgabor/rng.hpp"

namespace qgabor {

namespace {


std::int64_t exact_steps(double value, double step, const char* what) {
    bool exact = false;
    const std::int64_t k = aligned_steps(value, step, &exact);
    if (!exact) throw std::invalid_argument(std::string("gabor: ") + what);
    return k;
}

void validate_real_window(const QField& g) {
    if (norm_sq(g) == 0.0) throw std::invalid_argument("gabor: zero window");
    for (const auto& q : g.data())
        if (q.x != 0.0 || q.y != 0.0 || q.z != 0.0)
            throw std::invalid_argument("gabor: window must be real-valued");
}

struct LatticeLayout {
    std::int64_t s1{0};  // reciprocal bins per modulation step, axis 1
    std::int64_t s2{0};
};

LatticeLayout layout_for(const GaborSystem& sys) {
    const Grid2& g = sys.window.grid();
    LatticeLayout lay;
    lay.s1 = exact_steps(sys.beta * g.len1(), 1.0, "beta*L1 must be a positive integer");
    lay.s2 = exact_steps(sys.beta * g.len2(), 1.0, "beta*L2 must be a positive integer");
    if (lay.s1 < 1 || lay.s2 < 1)
        throw std::invalid_argument("gabor: beta too small for this domain");
    if ((2 * sys.n_range + 1) * lay.s1 > g.n1 || (2 * sys.n_range + 1) * lay.s2 > g.n2)
        throw std::invalid_argument("gabor: n_range exceeds distinct modulations of the grid");
    return lay;
}

std::int64_t wrap_bin(std::int64_t k, std::int64_t n) {
    k %= n;
    return k < 0 ? k + n : k;
}

/// Real separable probe whose Zak transform concentrates near the Gaussian
/// zero (alpha/2, alpha/2, 1/(2 alpha), 1/(2 alpha)): a bump in the tile
/// coordinate times an alternating, decaying tile sequence.
QField zak_zero_probe(const Grid2& grid, double alpha) {
    const double wx = alpha / 6.0;
    const double ws = 2.5;
    auto axis = [&](double t) {
        const double p = std::floor(t / alpha);
        const double t0 = t - alpha * p;
        const double u = (t0 - alpha / 2.0) / wx;
        const double sign = (static_cast<std::int64_t>(p) % 2 == 0) ? 1.0 : -1.0;
        return sign * std::exp(-u * u) * std::exp(-(p * p) / (ws * ws));
    };
    QField f(grid);
    for (std::int64_t a = 0; a < grid.n1; ++a) {
        const double v1 = axis(grid.x1(a));
        for (std::int64_t b = 0; b < grid.n2; ++b)
            f.at(a, b) = Quaternion::real(v1 * axis(grid.x2(b)));
    }
    return f;
}

}  // namespace

GaborSystem make_gabor_system(const QField& window, double alpha, double beta,
                              std::int64_t n_range) {
    validate_real_window(window);
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("gabor: lattice parameters must be positive");
    if (n_range < 0) throw std::invalid_argument("gabor: n_range must be nonnegative");
    const Grid2& g = window.grid();
    exact_steps(alpha, g.dx1, "alpha must be grid-aligned (axis 1)");
    exact_steps(alpha, g.dx2, "alpha must be grid-aligned (axis 2)");
    exact_steps(g.x1_min, g.dx1, "grid origin must be sample-aligned (axis 1)");
    exact_steps(g.x2_min, g.dx2, "grid origin must be sample-aligned (axis 2)");
    const std::int64_t t1 = exact_steps(g.len1(), alpha, "alpha must divide the period L1");
    const std::int64_t t2 = exact_steps(g.len2(), alpha, "alpha must divide the period L2");

    GaborSystem sys;
    sys.window = window;
    sys.alpha = alpha;
    sys.beta = beta;
    sys.n_range = n_range;
    sys.m1_lo = static_cast<std::int64_t>(std::ceil(g.x1_min / alpha - 1e-9));
    sys.m2_lo = static_cast<std::int64_t>(std::ceil(g.x2_min / alpha - 1e-9));
    sys.m1_hi = sys.m1_lo + t1 - 1;
    sys.m2_hi = sys.m2_lo + t2 - 1;
    layout_for(sys);  // validates beta against the grid
    return sys;
}

double GaborCoefficients::sum_sq() const {
    double s = 0.0;
    for (const auto& q : values) s += norm_sq(q);
    return s;
}

GaborCoefficients analysis(const QField& f, const GaborSystem& sys, CoefficientMode mode) {
    if (!(f.grid() == sys.window.grid()))
        throw std::invalid_argument("gabor: signal and window grids differ");
    const LatticeLayout lay = layout_for(sys);
    const Grid2& grid = f.grid();

    GaborCoefficients out;
    out.mode = mode;
    out.m1_lo = sys.m1_lo;
    out.m2_lo = sys.m2_lo;
    out.m1_count = sys.m1_count();
    out.m2_count = sys.m2_count();
    out.n_range = sys.n_range;
    out.values.resize(static_cast<std::size_t>(sys.lattice_size()));

    // one independent transform per translate; writes are disjoint per m
    parallel_for(sys.m1_count() * sys.m2_count(), [&](std::int64_t flat) {
        const std::int64_t m1 = sys.m1_lo + flat / sys.m2_count();
        const std::int64_t m2 = sys.m2_lo + flat % sys.m2_count();
        const QField tg = translate(sys.window, sys.alpha * static_cast<double>(m1),
                                    sys.alpha * static_cast<double>(m2));
        const QField R = rr_forward(mul_real(f, tg));
        for (std::int64_t n1 = -sys.n_range; n1 <= sys.n_range; ++n1) {
            const std::int64_t u = wrap_bin(n1 * lay.s1, grid.n1);
            for (std::int64_t n2 = -sys.n_range; n2 <= sys.n_range; ++n2) {
                const std::int64_t v = wrap_bin(n2 * lay.s2, grid.n2);
                Quaternion c = R.at(u, v);
                if (mode == CoefficientMode::Scalar) c = Quaternion::real(c.w);
                out.values[out.index(m1, m2, n1, n2)] = c;
            }
        }
    });

    // outer-shell mass as a truncation health estimate
    double shell = 0.0;
    for (std::int64_t m1 = sys.m1_lo; m1 <= sys.m1_hi; ++m1)
        for (std::int64_t m2 = sys.m2_lo; m2 <= sys.m2_hi; ++m2)
            for (std::int64_t n1 = -sys.n_range; n1 <= sys.n_range; ++n1)
                for (std::int64_t n2 = -sys.n_range; n2 <= sys.n_range; ++n2)
                    if (std::max(std::llabs(n1), std::llabs(n2)) == sys.n_range)
                        shell += norm_sq(out.at(m1, m2, n1, n2));
    const double total = norm_sq(f);
    if (sys.n_range > 0 && total > 0.0 && shell > 1e-6 * total) {
        std::ostringstream os;
        os << "truncation may be too small: outer modulation shell carries " << shell / total
           << " of ||f||^2";
        out.warning = os.str();
    }
    return out;
}

QField synthesis(const GaborCoefficients& c, const GaborSystem& sys) {
    const LatticeLayout lay = layout_for(sys);
    const Grid2& grid = sys.window.grid();
    if (c.n_range != sys.n_range || c.m1_count != sys.m1_count() ||
        c.m2_count != sys.m2_count())
        throw std::invalid_argument("gabor: coefficient layout does not match the system");

    // real-coefficient synthesis follows the written formula
    //   sum e^{2 pi i beta n1 x1} c g(x - alpha m) e^{2 pi j beta n2 x2};
    // quaternionic coefficients multiply the lattice atom M_{beta n} T_{alpha m} g
    // from the left, which is the expansion dual to the analysis products.
    const bool i_first = c.mode == CoefficientMode::Scalar;

    const Grid2 rg = reciprocal_grid(grid);
    const std::int64_t m_total = sys.m1_count() * sys.m2_count();
    std::vector<QField> partial(static_cast<std::size_t>(m_total));
    parallel_for(m_total, [&](std::int64_t flat) {
        const std::int64_t m1 = sys.m1_lo + flat / sys.m2_count();
        const std::int64_t m2 = sys.m2_lo + flat % sys.m2_count();
        QField bins(rg);
        for (std::int64_t n1 = -sys.n_range; n1 <= sys.n_range; ++n1) {
            const std::int64_t u = wrap_bin(n1 * lay.s1, grid.n1);
            for (std::int64_t n2 = -sys.n_range; n2 <= sys.n_range; ++n2) {
                const std::int64_t v = wrap_bin(n2 * lay.s2, grid.n2);
                bins.at(u, v) = c.at(m1, m2, n1, n2);
            }
        }
        QField s = rr_inverse_sum(bins, grid, i_first);
        const QField tg = translate(sys.window, sys.alpha * static_cast<double>(m1),
                                    sys.alpha * static_cast<double>(m2));
        for (std::int64_t a = 0; a < grid.n1; ++a)
            for (std::int64_t b = 0; b < grid.n2; ++b) s.at(a, b) *= tg.at(a, b).w;
        partial[static_cast<std::size_t>(flat)] = std::move(s);
    });

    // fixed-order reduction keeps the result independent of the schedule
    QField out(grid);
    for (const QField& s : partial)
        for (std::size_t k = 0; k < out.data().size(); ++k) out.data()[k] += s.data()[k];
    return out;
}

QField frame_apply(const QField& f, const GaborSystem& sys, CoefficientMode mode) {
    return synthesis(analysis(f, sys, mode), sys);
}

FrameBoundsEstimate empirical_frame_bounds(const GaborSystem& sys, std::int64_t trials,
                                           std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("gabor: trials must be >= 1");
    const Grid2& grid = sys.window.grid();
    const double nyq = 0.45 / std::max(grid.dx1, grid.dx2);
    const double cutoff =
        std::min(nyq, std::max(sys.beta, sys.beta * static_cast<double>(sys.n_range) - 4.0));

    std::vector<QField> probes;
    probes.push_back(sys.window);
    probes.push_back(translate(sys.window, sys.alpha, 0.0));
    probes.push_back(modulate(sys.window, sys.beta, 0.0));
    probes.push_back(zak_zero_probe(grid, sys.alpha));

    SeededRng rng(seed);
    for (std::int64_t t = 0; t < trials; ++t) {
        QField noise(grid);
        for (auto& q : noise.data()) q = rng.quaternion();
        probes.push_back(low_pass_roundtrip(noise, cutoff));
    }

    FrameBoundsEstimate est;
    est.method = "empirical";
    est.trials = trials;
    est.seed = seed;
    bool first = true;
    for (const QField& p : probes) {
        const double energy = norm_sq(p);
        if (energy <= 0.0) continue;
        const GaborCoefficients c = analysis(p, sys, CoefficientMode::Quaternionic);
        const double r = c.sum_sq() / energy;
        if (first) {
            est.A = est.B = r;
            first = false;
        } else {
            est.A = std::min(est.A, r);
            est.B = std::max(est.B, r);
        }
    }
    std::ostringstream meta;
    meta << "m1=[" << sys.m1_lo << "," << sys.m1_hi << "] m2=[" << sys.m2_lo << ","
         << sys.m2_hi << "] n_range=" << sys.n_range << " grid=" << grid.n1 << "x" << grid.n2
         << " probe_cutoff=" << cutoff;
    est.metadata = meta.str();
    return est;
}

}  // namespace qgabor
