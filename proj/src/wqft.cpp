#include "qgabor/wqft.hpp"

#include <cmath>
#include <stdexcept>

#include "qgabor/parallel.hpp"
#include "qgabor/qft.hpp"

namespace qgabor {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void require_real_window(const QField& g) {
    if (norm_sq(g) == 0.0) throw std::invalid_argument("wqft: zero window");
    for (const auto& q : g.data())
        if (q.x != 0.0 || q.y != 0.0 || q.z != 0.0)
            throw std::invalid_argument("wqft: window must be real-valued");
}

std::vector<std::int64_t> select_bins(std::int64_t n, double d, std::int64_t stride, double w_max) {
    std::vector<std::int64_t> bins;
    for (std::int64_t u = 0; u < n; u += stride)
        if (std::abs(wrapped_freq(u, n, d)) <= w_max) bins.push_back(u);
    return bins;
}

}  // namespace

void wqft_foreach_b(
    const QField& f, const QField& g, const WqftOptions& opts,
    const std::function<void(std::size_t, std::size_t, const std::vector<Quaternion>&)>& emit) {
    require_real_window(g);
    const Grid2& grid = f.grid();
    const Grid2 prg = reciprocal_grid(zero_pad(f, opts.pad).grid());
    const auto u_bins = select_bins(prg.n1, prg.dx1, opts.w_stride, opts.w_max);
    const auto v_bins = select_bins(prg.n2, prg.dx2, opts.w_stride, opts.w_max);

    const std::int64_t nb1 = (grid.n1 + opts.b_stride - 1) / opts.b_stride;
    const std::int64_t nb2 = (grid.n2 + opts.b_stride - 1) / opts.b_stride;
    std::vector<Quaternion> slice(u_bins.size() * v_bins.size());
    for (std::int64_t ib1 = 0; ib1 < nb1; ++ib1) {
        const double b1 = grid.x1(ib1 * opts.b_stride);
        for (std::int64_t ib2 = 0; ib2 < nb2; ++ib2) {
            const double b2 = grid.x2(ib2 * opts.b_stride);
            const QField h = mul_real(f, translate(g, b1, b2));
            const QField H = qft_forward(zero_pad(h, opts.pad));
            for (std::size_t iu = 0; iu < u_bins.size(); ++iu)
                for (std::size_t iv = 0; iv < v_bins.size(); ++iv)
                    slice[iu * v_bins.size() + iv] = H.at(u_bins[iu], v_bins[iv]);
            emit(static_cast<std::size_t>(ib1), static_cast<std::size_t>(ib2), slice);
        }
    }
}

WqftCoefficients wqft(const QField& f, const QField& g, const WqftOptions& opts) {
    require_real_window(g);
    const Grid2& grid = f.grid();
    WqftCoefficients out;
    out.padded_reciprocal = reciprocal_grid(zero_pad(f, opts.pad).grid());
    out.w1_bins = select_bins(out.padded_reciprocal.n1, out.padded_reciprocal.dx1, opts.w_stride,
                              opts.w_max);
    out.w2_bins = select_bins(out.padded_reciprocal.n2, out.padded_reciprocal.dx2, opts.w_stride,
                              opts.w_max);
    for (const std::int64_t u : out.w1_bins)
        out.w1.push_back(wrapped_freq(u, out.padded_reciprocal.n1, out.padded_reciprocal.dx1));
    for (const std::int64_t v : out.w2_bins)
        out.w2.push_back(wrapped_freq(v, out.padded_reciprocal.n2, out.padded_reciprocal.dx2));
    for (std::int64_t a = 0; a < grid.n1; a += opts.b_stride) out.b1.push_back(grid.x1(a));
    for (std::int64_t b = 0; b < grid.n2; b += opts.b_stride) out.b2.push_back(grid.x2(b));
    out.db_area = grid.dx1 * static_cast<double>(opts.b_stride) * grid.dx2 *
                  static_cast<double>(opts.b_stride);
    out.dw_area = out.padded_reciprocal.dx1 * static_cast<double>(opts.w_stride) *
                  out.padded_reciprocal.dx2 * static_cast<double>(opts.w_stride);

    const std::int64_t cells = static_cast<std::int64_t>(out.b1.size()) *
                               static_cast<std::int64_t>(out.b2.size()) *
                               static_cast<std::int64_t>(out.w1_bins.size()) *
                               static_cast<std::int64_t>(out.w2_bins.size());
    if (cells * static_cast<std::int64_t>(sizeof(Quaternion)) > opts.memory_guard_bytes)
        throw std::length_error(
            "wqft: coefficient array exceeds the memory guard; stream per-b slices instead");
    out.values.resize(static_cast<std::size_t>(cells));

    // parallel over b-slices; each slice writes a disjoint block
    const std::size_t nw = out.w1_bins.size() * out.w2_bins.size();
    const std::int64_t nb2 = static_cast<std::int64_t>(out.b2.size());
    parallel_for(static_cast<std::int64_t>(out.b1.size()) * nb2, [&](std::int64_t flat) {
        const std::size_t ib1 = static_cast<std::size_t>(flat / nb2);
        const std::size_t ib2 = static_cast<std::size_t>(flat % nb2);
        const double b1 = grid.x1(static_cast<std::int64_t>(ib1) * opts.b_stride);
        const double b2 = grid.x2(static_cast<std::int64_t>(ib2) * opts.b_stride);
        const QField h = mul_real(f, translate(g, b1, b2));
        const QField H = qft_forward(zero_pad(h, opts.pad));
        const std::size_t base = (ib1 * out.b2.size() + ib2) * nw;
        for (std::size_t iu = 0; iu < out.w1_bins.size(); ++iu)
            for (std::size_t iv = 0; iv < out.w2_bins.size(); ++iv)
                out.values[base + iu * out.w2_bins.size() + iv] =
                    H.at(out.w1_bins[iu], out.w2_bins[iv]);
    });
    return out;
}

Quaternion wqft_point_direct(const QField& f, const QField& g, double b1, double b2, double w1,
                             double w2) {
    const Grid2& grid = f.grid();
    const QField tg = translate(g, b1, b2);
    Quaternion acc{};
    for (std::int64_t a = 0; a < grid.n1; ++a) {
        const Quaternion left = exp_i(-kTwoPi * grid.x1(a) * w1);
        for (std::int64_t b = 0; b < grid.n2; ++b) {
            const Quaternion right = exp_j(-kTwoPi * grid.x2(b) * w2);
            acc += mul(mul(left, f.at(a, b) * tg.at(a, b).w), right);
        }
    }
    return acc * grid.cell_area();
}

Quaternion wqft_inner_form(const QField& f, const QField& g, double b1, double b2, double w1,
                           double w2) {
    return inner_q(f, modulate(translate(g, b1, b2), w1, w2));
}

QField wqft_reconstruct(const WqftCoefficients& coeffs, const QField& g) {
    require_real_window(g);
    const Grid2& grid = g.grid();
    const Grid2& prg = coeffs.padded_reciprocal;
    const std::int64_t o1 = (prg.n1 - grid.n1) / 2;
    const std::int64_t o2 = (prg.n2 - grid.n2) / 2;
    const double pad_x1_min = grid.x1_min - static_cast<double>(o1) * grid.dx1;
    const double pad_x2_min = grid.x2_min - static_cast<double>(o2) * grid.dx2;

    // stride factor between the sampled w set and the full bin quadrature
    const double w_weight = coeffs.dw_area / prg.cell_area();

    QField out(grid);
    const std::size_t nw2 = coeffs.w2_bins.size();
    for (std::size_t ib1 = 0; ib1 < coeffs.b1.size(); ++ib1)
        for (std::size_t ib2 = 0; ib2 < coeffs.b2.size(); ++ib2) {
            QField bins(prg);
            for (std::size_t iu = 0; iu < coeffs.w1_bins.size(); ++iu)
                for (std::size_t iv = 0; iv < nw2; ++iv)
                    bins.at(coeffs.w1_bins[iu], coeffs.w2_bins[iv]) = coeffs.at(ib1, ib2, iu, iv);
            const QField synth = qft_inverse(bins, pad_x1_min, pad_x2_min);
            const QField tg = translate(g, coeffs.b1[ib1], coeffs.b2[ib2]);
            for (std::int64_t a = 0; a < grid.n1; ++a)
                for (std::int64_t b = 0; b < grid.n2; ++b)
                    out.at(a, b) += synth.at(a + o1, b + o2) * (tg.at(a, b).w * w_weight);
        }
    const double scale = coeffs.db_area / norm_sq(g);
    for (auto& q : out.data()) q *= scale;
    return out;
}

OrthogonalityReport orthogonality_check(const QField& f, const QField& h, const QField& g,
                                        const WqftOptions& opts) {
    const WqftCoefficients qf = wqft(f, g, opts);
    const WqftCoefficients qh = wqft(h, g, opts);
    double lhs = 0.0;
    for (std::size_t k = 0; k < qf.values.size(); ++k)
        lhs += scalar_part(mul(qf.values[k], conj(qh.values[k])));
    lhs *= qf.db_area * qf.dw_area;
    const double rhs = norm_sq(g) * inner_sc(f, h);
    OrthogonalityReport rep;
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.rel_err = std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300);
    return rep;
}

CovarianceReport covariance_check(const QField& f, const QField& g, double x01, double x02,
                                  double w01, double w02) {
    const Grid2& grid = f.grid();
    WqftOptions opts;  // full b set, full reciprocal bins
    const WqftCoefficients base = wqft(f, g, opts);
    const WqftCoefficients shifted = wqft(translate(f, x01, x02), g, opts);
    const WqftCoefficients modulated = wqft(conj_modulate(f, w01, w02), g, opts);

    bool ex1 = false, ex2 = false;
    const std::int64_t s1 = aligned_steps(x01, grid.dx1, &ex1);
    const std::int64_t s2 = aligned_steps(x02, grid.dx2, &ex2);
    if (!ex1 || !ex2) throw std::invalid_argument("covariance_check: x0 must be grid-aligned");
    bool ek1 = false, ek2 = false;
    const std::int64_t k1 = aligned_steps(w01, base.padded_reciprocal.dx1, &ek1);
    const std::int64_t k2 = aligned_steps(w02, base.padded_reciprocal.dx2, &ek2);
    if (!ek1 || !ek2)
        throw std::invalid_argument("covariance_check: w0 must lie on the reciprocal lattice");

    const std::int64_t nb1 = static_cast<std::int64_t>(base.b1.size());
    const std::int64_t nb2 = static_cast<std::int64_t>(base.b2.size());
    const std::int64_t nw1 = static_cast<std::int64_t>(base.w1_bins.size());
    const std::int64_t nw2 = static_cast<std::int64_t>(base.w2_bins.size());

    CovarianceReport rep;
    for (std::int64_t ib1 = 0; ib1 < nb1; ++ib1)
        for (std::int64_t ib2 = 0; ib2 < nb2; ++ib2)
            for (std::int64_t iw1 = 0; iw1 < nw1; ++iw1) {
                // unwrapped bin frequency, matching the transform's kernels
                const double w1v =
                    static_cast<double>(base.w1_bins[iw1]) * base.padded_reciprocal.dx1;
                const Quaternion lphase = exp_i(-kTwoPi * x01 * w1v);
                for (std::int64_t iw2 = 0; iw2 < nw2; ++iw2) {
                    const double w2v =
                        static_cast<double>(base.w2_bins[iw2]) * base.padded_reciprocal.dx2;
                    const Quaternion rphase = exp_j(-kTwoPi * x02 * w2v);

                    const std::size_t i1 = static_cast<std::size_t>(ib1);
                    const std::size_t i2 = static_cast<std::size_t>(ib2);
                    const std::size_t j1 = static_cast<std::size_t>(iw1);
                    const std::size_t j2 = static_cast<std::size_t>(iw2);

                    // Q(T_{x0} f)(b, w) = e^{-2 pi i x01 w1} Q f(b - x0, w) e^{-2 pi j x02 w2}
                    const std::size_t kb1 = static_cast<std::size_t>(((ib1 - s1) % nb1 + nb1) % nb1);
                    const std::size_t kb2 = static_cast<std::size_t>(((ib2 - s2) % nb2 + nb2) % nb2);
                    const Quaternion expect_t =
                        mul(mul(lphase, base.at(kb1, kb2, j1, j2)), rphase);
                    rep.max_defect_translation =
                        std::max(rep.max_defect_translation,
                                 qgabor::abs(shifted.at(i1, i2, j1, j2) - expect_t));

                    // Q(conj(M_{-w0}) f)(b, w) = Q f(b, w - w0)
                    const std::size_t kw1 =
                        static_cast<std::size_t>(((base.w1_bins[iw1] - k1) % nw1 + nw1) % nw1);
                    const std::size_t kw2 =
                        static_cast<std::size_t>(((base.w2_bins[iw2] - k2) % nw2 + nw2) % nw2);
                    rep.max_defect_modulation =
                        std::max(rep.max_defect_modulation,
                                 qgabor::abs(modulated.at(i1, i2, j1, j2) -
                                             base.at(i1, i2, kw1, kw2)));
                }
            }
    return rep;
}

}  // namespace qgabor
