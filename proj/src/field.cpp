#include "qgabor/field.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <utility>

namespace qgabor {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

void Grid2::validate() const {
    if (n1 <= 0 || n2 <= 0) throw std::invalid_argument("Grid2: sample counts must be positive");
    if (!(dx1 > 0.0) || !(dx2 > 0.0))
        throw std::invalid_argument("Grid2: spacings must be positive");
    if (!std::isfinite(x1_min) || !std::isfinite(x2_min))
        throw std::invalid_argument("Grid2: origin must be finite");
}

Grid2 make_square_grid(std::int64_t n, double x_min, double x_max) {
    Grid2 g;
    g.n1 = g.n2 = n;
    g.x1_min = g.x2_min = x_min;
    g.dx1 = g.dx2 = (x_max - x_min) / static_cast<double>(n);
    g.validate();
    return g;
}

Grid2 reciprocal_grid(const Grid2& g) {
    Grid2 r;
    r.n1 = g.n1;
    r.n2 = g.n2;
    r.x1_min = 0.0;
    r.x2_min = 0.0;
    r.dx1 = 1.0 / g.len1();
    r.dx2 = 1.0 / g.len2();
    return r;
}

double wrapped_freq(std::int64_t u, std::int64_t n, double d) {
    const std::int64_t k = (2 * u <= n) ? u : u - n;
    return static_cast<double>(k) * d;
}

QField::QField(const Grid2& grid, std::vector<Quaternion> data)
    : grid_(grid), data_(std::move(data)) {
    grid_.validate();
    if (static_cast<std::int64_t>(data_.size()) != grid_.size())
        throw std::invalid_argument("QField: data size does not match grid");
}

const Quaternion& QField::at_wrapped(std::int64_t a, std::int64_t b) const {
    a %= grid_.n1;
    if (a < 0) a += grid_.n1;
    b %= grid_.n2;
    if (b < 0) b += grid_.n2;
    return at(a, b);
}

bool QField::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const Quaternion& q) { return is_finite(q); });
}

QField map_field(const Grid2& grid, const std::function<Quaternion(double, double)>& fn) {
    QField f(grid);
    for (std::int64_t a = 0; a < grid.n1; ++a)
        for (std::int64_t b = 0; b < grid.n2; ++b) f.at(a, b) = fn(grid.x1(a), grid.x2(b));
    return f;
}

static void require_same_grid(const QField& f, const QField& g) {
    if (!(f.grid() == g.grid())) throw std::invalid_argument("grid mismatch");
}

Quaternion inner_q(const QField& f, const QField& g) {
    require_same_grid(f, g);
    Quaternion acc{};
    const auto& fd = f.data();
    const auto& gd = g.data();
    for (std::size_t i = 0; i < fd.size(); ++i) acc += mul(fd[i], conj(gd[i]));
    return acc * f.grid().cell_area();
}

double inner_sc(const QField& f, const QField& g) {
    require_same_grid(f, g);
    double acc = 0.0;
    const auto& fd = f.data();
    const auto& gd = g.data();
    for (std::size_t i = 0; i < fd.size(); ++i)
        acc += fd[i].w * gd[i].w + fd[i].x * gd[i].x + fd[i].y * gd[i].y + fd[i].z * gd[i].z;
    return acc * f.grid().cell_area();
}

double norm_sq(const QField& f) { return inner_sc(f, f); }

QField add(const QField& f, const QField& g) {
    require_same_grid(f, g);
    QField out = f;
    for (std::size_t i = 0; i < out.data().size(); ++i) out.data()[i] += g.data()[i];
    return out;
}

QField sub(const QField& f, const QField& g) {
    require_same_grid(f, g);
    QField out = f;
    for (std::size_t i = 0; i < out.data().size(); ++i) out.data()[i] -= g.data()[i];
    return out;
}

QField scale(const QField& f, double s) {
    QField out = f;
    for (auto& q : out.data()) q *= s;
    return out;
}

QField scale_left(const QField& f, const Quaternion& lambda) {
    QField out = f;
    for (auto& q : out.data()) q = mul(lambda, q);
    return out;
}

QField mul_real(const QField& f, const QField& g_real) {
    require_same_grid(f, g_real);
    QField out = f;
    for (std::size_t i = 0; i < out.data().size(); ++i) out.data()[i] *= g_real.data()[i].w;
    return out;
}

double max_abs(const QField& f) {
    double m = 0.0;
    for (const auto& q : f.data()) m = std::max(m, qgabor::abs(q));
    return m;
}

double max_abs_diff(const QField& f, const QField& g) {
    require_same_grid(f, g);
    double m = 0.0;
    for (std::size_t i = 0; i < f.data().size(); ++i)
        m = std::max(m, qgabor::abs(f.data()[i] - g.data()[i]));
    return m;
}

std::int64_t aligned_steps(double b, double dx, bool* exact) {
    const double ratio = b / dx;
    const double rounded = std::nearbyint(ratio);
    if (exact) *exact = std::fabs(ratio - rounded) <= 1e-9 * std::max(1.0, std::fabs(ratio));
    return static_cast<std::int64_t>(rounded);
}

QField translate(const QField& f, double b1, double b2) {
    bool e1 = false, e2 = false;
    const std::int64_t s1 = aligned_steps(b1, f.grid().dx1, &e1);
    const std::int64_t s2 = aligned_steps(b2, f.grid().dx2, &e2);
    if (!e1 || !e2)
        std::fprintf(stderr,
                     "warning: translate: b=(%g, %g) is not grid-aligned, snapping to nearest sample\n",
                     b1, b2);
    QField out(f.grid());
    for (std::int64_t a = 0; a < f.n1(); ++a)
        for (std::int64_t b = 0; b < f.n2(); ++b) out.at(a, b) = f.at_wrapped(a - s1, b - s2);
    return out;
}

QField modulate(const QField& f, double w1, double w2) {
    QField out(f.grid());
    const Grid2& g = f.grid();
    std::vector<Quaternion> right(static_cast<std::size_t>(g.n1));
    for (std::int64_t a = 0; a < g.n1; ++a) right[static_cast<std::size_t>(a)] = exp_i(kTwoPi * w1 * g.x1(a));
    for (std::int64_t b = 0; b < g.n2; ++b) {
        const Quaternion left = exp_j(kTwoPi * w2 * g.x2(b));
        for (std::int64_t a = 0; a < g.n1; ++a)
            out.at(a, b) = mul(mul(left, f.at(a, b)), right[static_cast<std::size_t>(a)]);
    }
    return out;
}

QField conj_modulate(const QField& f, double w1, double w2) {
    QField out(f.grid());
    const Grid2& g = f.grid();
    std::vector<Quaternion> left(static_cast<std::size_t>(g.n1));
    for (std::int64_t a = 0; a < g.n1; ++a) left[static_cast<std::size_t>(a)] = exp_i(kTwoPi * w1 * g.x1(a));
    for (std::int64_t b = 0; b < g.n2; ++b) {
        const Quaternion right = exp_j(kTwoPi * w2 * g.x2(b));
        for (std::int64_t a = 0; a < g.n1; ++a)
            out.at(a, b) = mul(mul(left[static_cast<std::size_t>(a)], f.at(a, b)), right);
    }
    return out;
}

CommutationReport commutation_check(const QField& g, double b1, double b2, double w1,
                                    double w2) {
    const QField tm = translate(modulate(g, w1, w2), b1, b2);
    const QField mt = modulate(translate(g, b1, b2), w1, w2);
    // T_b M_w g = exp(-2 pi j b2 w2) (M_w T_b g) exp(-2 pi i b1 w1): shifting
    // the modulated window conjugates the phases picked up at x - b.
    const Quaternion phase_l = exp_j(-kTwoPi * b2 * w2);
    const Quaternion phase_r = exp_i(-kTwoPi * b1 * w1);
    CommutationReport rep;
    for (std::int64_t a = 0; a < g.n1(); ++a)
        for (std::int64_t b = 0; b < g.n2(); ++b) {
            const Quaternion twisted = mul(mul(phase_l, mt.at(a, b)), phase_r);
            rep.twisted_defect = std::max(rep.twisted_defect, qgabor::abs(tm.at(a, b) - twisted));
            rep.plain_defect = std::max(rep.plain_defect, qgabor::abs(tm.at(a, b) - mt.at(a, b)));
        }
    return rep;
}

double wiener_amalgam_norm(const QField& g, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("wiener_amalgam_norm: alpha must be positive");
    bool e1 = false, e2 = false;
    aligned_steps(alpha, g.grid().dx1, &e1);
    aligned_steps(alpha, g.grid().dx2, &e2);
    if (!e1 || !e2)
        throw std::invalid_argument("wiener_amalgam_norm: alpha does not tile the grid");
    std::map<std::pair<std::int64_t, std::int64_t>, double> tile_sup;
    for (std::int64_t a = 0; a < g.n1(); ++a) {
        const std::int64_t t1 = static_cast<std::int64_t>(std::floor(g.grid().x1(a) / alpha + 1e-12));
        for (std::int64_t b = 0; b < g.n2(); ++b) {
            const std::int64_t t2 = static_cast<std::int64_t>(std::floor(g.grid().x2(b) / alpha + 1e-12));
            double& sup = tile_sup[{t1, t2}];
            sup = std::max(sup, qgabor::abs(g.at(a, b)));
        }
    }
    double total = 0.0;
    for (const auto& [key, sup] : tile_sup) total += sup;
    return total;
}

}  // namespace qgabor
