// qgabor: batch front end for quaternionic time-frequency analysis.
// Exit codes: 0 success, 1 computation/file failure, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "qgabor/density.hpp"
#include "qgabor/parallel.hpp"
#include "qgabor/gabor.hpp"
#include "qgabor/qf2_io.hpp"
#include "qgabor/qft.hpp"
#include "qgabor/verify.hpp"
#include "qgabor/window.hpp"
#include "qgabor/wqft.hpp"
#include "qgabor/zak.hpp"

using json = nlohmann::ordered_json;
using namespace qgabor;

namespace {

struct GridFlags {
    std::int64_t n{128};
    double lo{-8.0};
    double hi{8.0};
    Grid2 make() const { return make_square_grid(n, lo, hi); }
};

void add_grid_flags(CLI::App* cmd, GridFlags& gf) {
    cmd->add_option("--grid-n", gf.n, "samples per axis");
    cmd->add_option("--grid-min", gf.lo, "domain lower edge");
    cmd->add_option("--grid-max", gf.hi, "domain upper edge");
}

struct WindowFlags {
    std::string kind{"gaussian"};
    double param{1.0};
};

void add_window_flags(CLI::App* cmd, WindowFlags& wf) {
    cmd->add_option("--window", wf.kind, "window kind: gaussian|box|hat");
    cmd->add_option("--param", wf.param, "box side / hat half-width");
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << text;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json bounds_to_json(const ZakFrameBounds& b, const std::string& verdict = "") {
    json evidence;
    const ZakBoundsLevel& finest = b.levels.back();
    evidence["grid"] = {finest.r, finest.s};
    evidence["trunc"] = finest.trunc;
    evidence["min_location"] = finest.min_location;
    json refs = json::array();
    for (const ZakBoundsLevel& lvl : b.levels)
        refs.push_back({{"r", lvl.r}, {"s", lvl.s}, {"A", lvl.A}, {"B", lvl.B}});
    evidence["refinements"] = refs;

    json j;
    j["window"] = b.window;
    j["window_normalized"] = b.window_normalized;
    j["alpha"] = b.alpha;
    if (!verdict.empty()) j["verdict"] = verdict;
    j["A"] = b.A;
    j["B"] = b.B;
    j["evidence"] = evidence;
    j["footnote"] =
        "A and B are alpha^2 * grid extrema of |Z g|^2; the unscaled criterion "
        "0 < a <= |Z g|^2 <= b differs from these by the alpha^2 factor";
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"two-sided quaternionic Fourier / Gabor / Zak toolbox"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "cap internal parallelism (0 = auto)");
    app.immediate_callback();
    app.callback([&]() { set_max_threads(threads); });

    // ---- qft ----------------------------------------------------------------
    auto* qft_cmd = app.add_subcommand("qft", "two-sided transform of a QF2 field");
    std::string qft_in, qft_out;
    bool qft_inv = false;
    double inv_x1 = 0.0, inv_x2 = 0.0;
    bool have_x1 = false, have_x2 = false;
    qft_cmd->add_option("--in", qft_in, "input .qf2")->required();
    qft_cmd->add_option("--out", qft_out, "output .qf2")->required();
    qft_cmd->add_flag("--inverse", qft_inv, "apply the inverse transform");
    qft_cmd->add_option("--x1-min", inv_x1, "reconstruction origin x1 (default centered)")
        ->each([&](const std::string&) { have_x1 = true; });
    qft_cmd->add_option("--x2-min", inv_x2, "reconstruction origin x2 (default centered)")
        ->each([&](const std::string&) { have_x2 = true; });
    qft_cmd->callback([&]() {
        const QField f = read_qf2(qft_in);
        QField out;
        if (!qft_inv) {
            out = qft_forward(f);
        } else if (have_x1 || have_x2) {
            out = qft_inverse(f, inv_x1, inv_x2);
        } else {
            out = qft_inverse(f);
        }
        write_qf2(qft_out, out);
    });

    // ---- wqft ---------------------------------------------------------------
    auto* wq_cmd = app.add_subcommand("wqft", "windowed transform slice at fixed b");
    std::string wq_in, wq_out;
    WindowFlags wq_wf;
    double wq_b1 = 0.0, wq_b2 = 0.0, wq_wmax = std::numeric_limits<double>::infinity();
    std::int64_t wq_pad = 1;
    wq_cmd->add_option("--in", wq_in, "input .qf2")->required();
    wq_cmd->add_option("--out", wq_out, "output CSV (b fixed, omega varying)")->required();
    add_window_flags(wq_cmd, wq_wf);
    wq_cmd->add_option("--b1", wq_b1, "translation b1 (grid-aligned)");
    wq_cmd->add_option("--b2", wq_b2, "translation b2 (grid-aligned)");
    wq_cmd->add_option("--pad", wq_pad, "zero-pad factor for finer omega spacing");
    wq_cmd->add_option("--wmax", wq_wmax, "keep |omega| <= wmax per axis");
    wq_cmd->callback([&]() {
        const QField f = read_qf2(wq_in);
        const QField g = sample_window(parse_window_spec(wq_wf.kind, wq_wf.param), f.grid());
        const QField h = mul_real(f, translate(g, wq_b1, wq_b2));
        const QField H = qft_forward(zero_pad(h, wq_pad));
        const Grid2& rg = H.grid();
        std::string csv = "\xcf\x89\x31,\xcf\x89\x32,w,x,y,z\n";  // omega1, omega2
        for (std::int64_t u = 0; u < rg.n1; ++u) {
            const double w1 = wrapped_freq(u, rg.n1, rg.dx1);
            if (std::abs(w1) > wq_wmax) continue;
            for (std::int64_t v = 0; v < rg.n2; ++v) {
                const double w2 = wrapped_freq(v, rg.n2, rg.dx2);
                if (std::abs(w2) > wq_wmax) continue;
                const Quaternion& q = H.at(u, v);
                csv += fmt_double(w1) + "," + fmt_double(w2) + "," + fmt_double(q.w) + "," +
                       fmt_double(q.x) + "," + fmt_double(q.y) + "," + fmt_double(q.z) + "\n";
            }
        }
        write_text(wq_out, csv);
    });

    // ---- gabor ----------------------------------------------------------------
    auto* ga_cmd = app.add_subcommand("gabor", "Gabor analysis / synthesis / frame bounds");
    ga_cmd->require_subcommand(1);

    auto* ga_an = ga_cmd->add_subcommand("analyze", "coefficient dump");
    std::string ga_in, ga_out, ga_mode = "scalar";
    WindowFlags ga_wf;
    double ga_alpha = 1.0, ga_beta = 1.0;
    std::int64_t ga_nrange = 4;
    ga_an->add_option("--in", ga_in, "input .qf2")->required();
    ga_an->add_option("--out", ga_out, "output CSV")->required();
    add_window_flags(ga_an, ga_wf);
    ga_an->add_option("--alpha", ga_alpha, "translation step");
    ga_an->add_option("--beta", ga_beta, "modulation step");
    ga_an->add_option("--nrange", ga_nrange, "modulation truncation");
    ga_an->add_option("--mode", ga_mode, "scalar|quaternionic");
    ga_an->callback([&]() {
        const QField f = read_qf2(ga_in);
        const QField g = sample_window(parse_window_spec(ga_wf.kind, ga_wf.param), f.grid());
        const GaborSystem sys = make_gabor_system(g, ga_alpha, ga_beta, ga_nrange);
        const CoefficientMode mode =
            ga_mode == "quaternionic" ? CoefficientMode::Quaternionic : CoefficientMode::Scalar;
        const GaborCoefficients c = analysis(f, sys, mode);
        if (!c.warning.empty()) std::cerr << "warning: " << c.warning << "\n";
        std::string csv = mode == CoefficientMode::Scalar ? "m1,m2,n1,n2,w\n"
                                                          : "m1,m2,n1,n2,w,x,y,z\n";
        for (std::int64_t m1 = sys.m1_lo; m1 <= sys.m1_hi; ++m1)
            for (std::int64_t m2 = sys.m2_lo; m2 <= sys.m2_hi; ++m2)
                for (std::int64_t n1 = -sys.n_range; n1 <= sys.n_range; ++n1)
                    for (std::int64_t n2 = -sys.n_range; n2 <= sys.n_range; ++n2) {
                        const Quaternion& q = c.at(m1, m2, n1, n2);
                        csv += std::to_string(m1) + "," + std::to_string(m2) + "," +
                               std::to_string(n1) + "," + std::to_string(n2) + "," +
                               fmt_double(q.w);
                        if (mode == CoefficientMode::Quaternionic)
                            csv += "," + fmt_double(q.x) + "," + fmt_double(q.y) + "," +
                                   fmt_double(q.z);
                        csv += "\n";
                    }
        write_text(ga_out, csv);
    });

    auto* ga_sy = ga_cmd->add_subcommand("synthesize", "field from coefficient CSV");
    std::string sy_coeffs, sy_out;
    WindowFlags sy_wf;
    GridFlags sy_gf;
    double sy_alpha = 1.0, sy_beta = 1.0;
    std::int64_t sy_nrange = 4;
    ga_sy->add_option("--coeffs", sy_coeffs, "coefficient CSV (from analyze)")->required();
    ga_sy->add_option("--out", sy_out, "output .qf2")->required();
    add_window_flags(ga_sy, sy_wf);
    add_grid_flags(ga_sy, sy_gf);
    ga_sy->add_option("--alpha", sy_alpha, "translation step");
    ga_sy->add_option("--beta", sy_beta, "modulation step");
    ga_sy->add_option("--nrange", sy_nrange, "modulation truncation");
    ga_sy->callback([&]() {
        const QField g =
            sample_window(parse_window_spec(sy_wf.kind, sy_wf.param), sy_gf.make());
        const GaborSystem sys = make_gabor_system(g, sy_alpha, sy_beta, sy_nrange);
        GaborCoefficients c;
        c.mode = CoefficientMode::Scalar;
        c.m1_lo = sys.m1_lo;
        c.m2_lo = sys.m2_lo;
        c.m1_count = sys.m1_count();
        c.m2_count = sys.m2_count();
        c.n_range = sys.n_range;
        c.values.assign(static_cast<std::size_t>(sys.lattice_size()), Quaternion{});
        std::ifstream is(sy_coeffs);
        if (!is) throw std::runtime_error("cannot open coefficients: " + sy_coeffs);
        std::string line;
        std::getline(is, line);  // header
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            Quaternion q{};
            long long m1, m2, n1, n2;
            const int got = std::sscanf(line.c_str(), "%lld,%lld,%lld,%lld,%lf,%lf,%lf,%lf",
                                        &m1, &m2, &n1, &n2, &q.w, &q.x, &q.y, &q.z);
            if (got < 5) throw std::runtime_error("bad coefficient row: " + line);
            if (got > 5) c.mode = CoefficientMode::Quaternionic;
            c.values[c.index(m1, m2, n1, n2)] = q;
        }
        write_qf2(sy_out, synthesis(c, sys));
    });

    auto* ga_fb = ga_cmd->add_subcommand("framebounds", "empirical Rayleigh bounds");
    WindowFlags fb_wf;
    GridFlags fb_gf;
    std::string fb_out;
    double fb_alpha = 1.0, fb_beta = 1.0;
    std::int64_t fb_nrange = 4, fb_trials = 8;
    std::uint64_t fb_seed = 1;
    add_window_flags(ga_fb, fb_wf);
    add_grid_flags(ga_fb, fb_gf);
    ga_fb->add_option("--alpha", fb_alpha, "translation step");
    ga_fb->add_option("--beta", fb_beta, "modulation step");
    ga_fb->add_option("--nrange", fb_nrange, "modulation truncation");
    ga_fb->add_option("--trials", fb_trials, "random probes");
    ga_fb->add_option("--seed", fb_seed, "probe seed");
    ga_fb->add_option("--out", fb_out, "output JSON (default stdout)");
    ga_fb->callback([&]() {
        const QField g =
            sample_window(parse_window_spec(fb_wf.kind, fb_wf.param), fb_gf.make());
        const GaborSystem sys = make_gabor_system(g, fb_alpha, fb_beta, fb_nrange);
        const FrameBoundsEstimate est = empirical_frame_bounds(sys, fb_trials, fb_seed);
        json j;
        j["window"] = fb_wf.kind;
        j["alpha"] = fb_alpha;
        j["beta"] = fb_beta;
        j["A"] = est.A;
        j["B"] = est.B;
        j["method"] = est.method;
        j["trials"] = est.trials;
        j["seed"] = est.seed;
        j["metadata"] = est.metadata;
        write_text(fb_out, j.dump(2) + "\n");
    });

    // ---- zak ---------------------------------------------------------------
    auto* zk_cmd = app.add_subcommand("zak", "Zak transform grids and slices");
    zk_cmd->require_subcommand(1);

    auto* zk_slice = zk_cmd->add_subcommand("slice", "|Z|^2 over omega at fixed x");
    WindowFlags zs_wf;
    std::string zs_out;
    double zs_alpha = 1.0, zs_x1 = 0.0, zs_x2 = 0.0;
    std::int64_t zs_s = 32, zs_M = 10;
    add_window_flags(zk_slice, zs_wf);
    zk_slice->add_option("--alpha", zs_alpha, "lattice parameter");
    zk_slice->add_option("--x1", zs_x1, "slice coordinate x1");
    zk_slice->add_option("--x2", zs_x2, "slice coordinate x2");
    zk_slice->add_option("--s", zs_s, "omega samples per axis");
    zk_slice->add_option("--trunc", zs_M, "lattice truncation");
    zk_slice->add_option("--out", zs_out, "output CSV (default stdout)");
    zk_slice->callback([&]() {
        const ZakSource src = ZakSource::analytic(parse_window_spec(zs_wf.kind, zs_wf.param));
        std::string csv = "\xcf\x89\x31,\xcf\x89\x32,absZ2\n";
        for (std::int64_t l1 = 0; l1 < zs_s; ++l1)
            for (std::int64_t l2 = 0; l2 < zs_s; ++l2) {
                const double w1 = static_cast<double>(l1) / (zs_alpha * static_cast<double>(zs_s));
                const double w2 = static_cast<double>(l2) / (zs_alpha * static_cast<double>(zs_s));
                const Quaternion z =
                    zak_point(src, zs_alpha, zs_x1, zs_x2, w1, w2, symmetric_range(zs_M));
                csv += fmt_double(w1) + "," + fmt_double(w2) + "," + fmt_double(norm_sq(z)) + "\n";
            }
        write_text(zs_out, csv);
    });

    auto* zk_grid = zk_cmd->add_subcommand("grid", "modulus statistics over the cube");
    WindowFlags zg_wf;
    std::string zg_out;
    double zg_alpha = 1.0;
    std::int64_t zg_r = 32, zg_s = 32, zg_M = 10;
    add_window_flags(zk_grid, zg_wf);
    zk_grid->add_option("--alpha", zg_alpha, "lattice parameter");
    zk_grid->add_option("--r", zg_r, "x samples per axis");
    zk_grid->add_option("--s", zg_s, "omega samples per axis");
    zk_grid->add_option("--trunc", zg_M, "lattice truncation");
    zk_grid->add_option("--out", zg_out, "output JSON (default stdout)");
    zk_grid->callback([&]() {
        const ZakField z = zak_grid(ZakSource::analytic(parse_window_spec(zg_wf.kind, zg_wf.param)),
                                    zg_alpha, zg_r, zg_r, zg_s, zg_s, symmetric_range(zg_M));
        double lo = 0.0, hi = 0.0;
        bool first = true;
        for (const Quaternion& q : z.values) {
            const double m2 = norm_sq(q);
            lo = first ? m2 : std::min(lo, m2);
            hi = first ? m2 : std::max(hi, m2);
            first = false;
        }
        json j;
        j["window"] = zg_wf.kind;
        j["alpha"] = zg_alpha;
        j["grid"] = {zg_r, zg_s};
        j["trunc"] = zg_M;
        j["min_absZ2"] = lo;
        j["max_absZ2"] = hi;
        j["norm_sq"] = zak_inner_sc(z, z);
        write_text(zg_out, j.dump(2) + "\n");
    });

    // ---- density -----------------------------------------------------------
    auto* de_cmd = app.add_subcommand("density", "frame certificates at critical density");
    de_cmd->require_subcommand(1);

    auto* de_fb = de_cmd->add_subcommand("framebounds", "optimal bounds from |Z g|^2");
    WindowFlags de_wf;
    std::string de_out;
    double de_alpha = 1.0;
    std::int64_t de_r = 16, de_s = 16, de_M = 10, de_refine = 0;
    add_window_flags(de_fb, de_wf);
    de_fb->add_option("--alpha", de_alpha, "lattice parameter");
    de_fb->add_option("--r", de_r, "x samples per axis");
    de_fb->add_option("--s", de_s, "omega samples per axis");
    de_fb->add_option("--trunc", de_M, "lattice truncation");
    de_fb->add_option("--refine", de_refine, "dyadic refinement steps");
    de_fb->add_option("--out", de_out, "output JSON (default stdout)");
    de_fb->callback([&]() {
        const ZakFrameBounds b = optimal_frame_bounds(parse_window_spec(de_wf.kind, de_wf.param),
                                                      de_alpha, de_r, de_s, de_M, de_refine);
        write_text(de_out, bounds_to_json(b).dump(2) + "\n");
    });

    auto* de_dec = de_cmd->add_subcommand("decide", "frame / not-frame / onb verdict");
    WindowFlags dd_wf;
    std::string dd_out;
    double dd_alpha = 1.0;
    std::int64_t dd_r = 8, dd_s = 8, dd_M = 10, dd_ref = 2;
    add_window_flags(de_dec, dd_wf);
    de_dec->add_option("--alpha", dd_alpha, "lattice parameter");
    de_dec->add_option("--r", dd_r, "base x samples per axis");
    de_dec->add_option("--s", dd_s, "base omega samples per axis");
    de_dec->add_option("--trunc", dd_M, "lattice truncation");
    de_dec->add_option("--refine", dd_ref, "refinement steps for the evidence");
    de_dec->add_option("--out", dd_out, "output JSON (default stdout)");
    de_dec->callback([&]() {
        const FrameDecision d = frame_decision(parse_window_spec(dd_wf.kind, dd_wf.param),
                                               dd_alpha, {}, dd_r, dd_s, dd_M, dd_ref);
        json j = bounds_to_json(d.bounds, d.verdict);
        j["analytic_zero_certificate"] = d.analytic_zero_certificate;
        if (dd_wf.kind == "gaussian") {
            j["gaussian_zero"] = {{"abs_value", abs(d.zero_report.value)},
                                  {"paired_cancellation", d.zero_report.paired_cancellation}};
        }
        write_text(dd_out, j.dump(2) + "\n");
    });

    auto* de_gz = de_cmd->add_subcommand("gauss-zero", "Gaussian Zak zero certificate");
    double gz_alpha = 1.0;
    std::int64_t gz_M = 8;
    std::string gz_out;
    bool gz_broken = false;
    de_gz->add_option("--alpha", gz_alpha, "lattice parameter");
    de_gz->add_option("--trunc", gz_M, "pairing truncation");
    de_gz->add_flag("--pair-broken", gz_broken, "negative control: drop index -1");
    de_gz->add_option("--out", gz_out, "output JSON (default stdout)");
    de_gz->callback([&]() {
        const GaussianZeroReport rep = gz_broken
                                           ? gaussian_zak_critical_value_pair_broken(gz_alpha, gz_M)
                                           : gaussian_zak_critical_value(gz_alpha, gz_M);
        json j;
        j["alpha"] = rep.alpha;
        j["trunc"] = rep.trunc;
        j["range"] = {rep.range_lo, rep.range_hi};
        j["abs_value"] = abs(rep.value);
        j["value"] = {rep.value.w, rep.value.x, rep.value.y, rep.value.z};
        j["paired_cancellation"] = rep.paired_cancellation;
        j["max_pair_defect"] = rep.max_pair_defect;
        write_text(gz_out, j.dump(2) + "\n");
    });

    // ---- uncertainty ---------------------------------------------------------
    auto* un_cmd = app.add_subcommand("uncertainty", "spatial/spectral uncertainty products");
    std::string un_in, un_out;
    un_cmd->add_option("--in", un_in, "input .qf2")->required();
    un_cmd->add_option("--out", un_out, "output JSON (default stdout)");
    un_cmd->callback([&]() {
        const UncertaintyReport rep = uncertainty(read_qf2(un_in));
        json j;
        j["delta_x"] = rep.delta_x;
        j["delta_omega"] = rep.delta_omega;
        j["products"] = rep.products;
        j["bound"] = rep.bound;
        write_text(un_out, j.dump(2) + "\n");
    });

    // ---- verify -----------------------------------------------------------------
    auto* ve_cmd = app.add_subcommand("verify", "run the full property suite");
    std::uint64_t ve_seed = 7;
    std::string ve_out;
    ve_cmd->add_option("--seed", ve_seed, "suite seed");
    ve_cmd->add_option("--out", ve_out, "also write the table to a file");
    ve_cmd->callback([&]() {
        const VerifyReport rep = run_verify_suite(ve_seed);
        const std::string table = format_verify_table(rep);
        std::fputs(table.c_str(), stdout);
        if (!ve_out.empty()) write_text(ve_out, table);
        if (!rep.all_pass) throw std::runtime_error("verification failures");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
