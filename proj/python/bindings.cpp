#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qgabor/density.hpp"
#include "qgabor/gabor.hpp"
#include "qgabor/qf2_io.hpp"
#include "qgabor/qft.hpp"
#include "qgabor/verify.hpp"
#include "qgabor/window.hpp"
#include "qgabor/wqft.hpp"
#include "qgabor/zak.hpp"

namespace py = pybind11;
using namespace qgabor;

namespace {

py::array_t<double> field_to_numpy(const QField& f) {
    py::array_t<double> out({f.n1(), f.n2(), std::int64_t{4}});
    auto r = out.mutable_unchecked<3>();
    for (std::int64_t a = 0; a < f.n1(); ++a)
        for (std::int64_t b = 0; b < f.n2(); ++b) {
            const Quaternion& q = f.at(a, b);
            r(a, b, 0) = q.w;
            r(a, b, 1) = q.x;
            r(a, b, 2) = q.y;
            r(a, b, 3) = q.z;
        }
    return out;
}

QField field_from_numpy(const Grid2& grid, const py::array_t<double>& arr) {
    const auto r = arr.unchecked<3>();
    if (r.shape(0) != grid.n1 || r.shape(1) != grid.n2 || r.shape(2) != 4)
        throw std::invalid_argument("array shape must be (n1, n2, 4)");
    QField f(grid);
    for (std::int64_t a = 0; a < grid.n1; ++a)
        for (std::int64_t b = 0; b < grid.n2; ++b)
            f.at(a, b) = {r(a, b, 0), r(a, b, 1), r(a, b, 2), r(a, b, 3)};
    return f;
}

py::dict bounds_to_dict(const ZakFrameBounds& b) {
    py::dict d;
    d["window"] = b.window;
    d["window_normalized"] = b.window_normalized;
    d["alpha"] = b.alpha;
    d["A"] = b.A;
    d["B"] = b.B;
    py::list levels;
    for (const ZakBoundsLevel& lvl : b.levels) {
        py::dict ld;
        ld["r"] = lvl.r;
        ld["s"] = lvl.s;
        ld["trunc"] = lvl.trunc;
        ld["A"] = lvl.A;
        ld["B"] = lvl.B;
        ld["min_location"] = lvl.min_location;
        levels.append(ld);
    }
    d["levels"] = levels;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "two-sided quaternionic Fourier analysis: QFT, windowed QFT, "
              "Gabor systems, Zak transform and frame-bound certificates";
    m.attr("__version__") = "0.1.0";

    py::class_<Quaternion>(m, "Quaternion")
        .def(py::init<double, double, double, double>(), py::arg("w") = 0.0, py::arg("x") = 0.0,
             py::arg("y") = 0.0, py::arg("z") = 0.0)
        .def_readwrite("w", &Quaternion::w)
        .def_readwrite("x", &Quaternion::x)
        .def_readwrite("y", &Quaternion::y)
        .def_readwrite("z", &Quaternion::z)
        .def("__mul__", [](const Quaternion& p, const Quaternion& q) { return mul(p, q); })
        .def("__add__", [](const Quaternion& p, const Quaternion& q) { return p + q; })
        .def("__sub__", [](const Quaternion& p, const Quaternion& q) { return p - q; })
        .def("conj", [](const Quaternion& q) { return conj(q); })
        .def("__abs__", [](const Quaternion& q) { return abs(q); })
        .def("scalar_part", [](const Quaternion& q) { return scalar_part(q); })
        .def("__repr__", [](const Quaternion& q) {
            return "Quaternion(" + std::to_string(q.w) + ", " + std::to_string(q.x) + ", " +
                   std::to_string(q.y) + ", " + std::to_string(q.z) + ")";
        });

    py::class_<Grid2>(m, "Grid2")
        .def(py::init([](std::int64_t n1, std::int64_t n2, double x1_min, double x2_min,
                         double dx1, double dx2) {
                 Grid2 g{n1, n2, x1_min, x2_min, dx1, dx2};
                 g.validate();
                 return g;
             }),
             py::arg("n1"), py::arg("n2"), py::arg("x1_min"), py::arg("x2_min"), py::arg("dx1"),
             py::arg("dx2"))
        .def_readonly("n1", &Grid2::n1)
        .def_readonly("n2", &Grid2::n2)
        .def_readonly("x1_min", &Grid2::x1_min)
        .def_readonly("x2_min", &Grid2::x2_min)
        .def_readonly("dx1", &Grid2::dx1)
        .def_readonly("dx2", &Grid2::dx2)
        .def("__eq__", [](const Grid2& a, const Grid2& b) { return a == b; });

    m.def("square_grid", &make_square_grid, py::arg("n"), py::arg("x_min"), py::arg("x_max"));

    py::class_<QField>(m, "QField")
        .def(py::init<const Grid2&>())
        .def(py::init(&field_from_numpy), py::arg("grid"), py::arg("array"))
        .def_property_readonly("grid", &QField::grid)
        .def("to_numpy", &field_to_numpy)
        .def("norm_sq", [](const QField& f) { return norm_sq(f); });

    m.def("sample_window",
          [](const std::string& kind, double param, const Grid2& grid) {
              return sample_window(parse_window_spec(kind, param), grid);
          },
          py::arg("kind"), py::arg("param"), py::arg("grid"));
    m.def("inner_sc", &inner_sc);
    m.def("inner_q", &inner_q);
    m.def("translate", &translate);
    m.def("modulate", &modulate);
    m.def("wiener_amalgam_norm", &wiener_amalgam_norm);

    m.def("qft_forward", &qft_forward);
    m.def("qft_inverse", py::overload_cast<const QField&>(&qft_inverse));
    m.def("qft_inverse", py::overload_cast<const QField&, double, double>(&qft_inverse));
    m.def("uncertainty", [](const QField& f) {
        const UncertaintyReport rep = uncertainty(f);
        py::dict d;
        d["delta_x"] = rep.delta_x;
        d["delta_omega"] = rep.delta_omega;
        d["products"] = rep.products;
        d["bound"] = rep.bound;
        return d;
    });

    m.def("wqft_point",
          [](const QField& f, const QField& g, double b1, double b2, double w1, double w2) {
              return wqft_point_direct(f, g, b1, b2, w1, w2);
          },
          py::arg("f"), py::arg("window"), py::arg("b1"), py::arg("b2"), py::arg("w1"),
          py::arg("w2"));

    m.def("zak_point",
          [](const std::string& kind, double param, double alpha, double x1, double x2,
             double w1, double w2, std::int64_t trunc) {
              return zak_point(ZakSource::analytic(parse_window_spec(kind, param)), alpha, x1,
                               x2, w1, w2, symmetric_range(trunc));
          },
          py::arg("kind"), py::arg("param"), py::arg("alpha"), py::arg("x1"), py::arg("x2"),
          py::arg("w1"), py::arg("w2"), py::arg("trunc") = 10);

    m.def("gabor_frame_bounds",
          [](const QField& window, double alpha, double beta, std::int64_t n_range,
             std::int64_t trials, std::uint64_t seed) {
              const GaborSystem sys = make_gabor_system(window, alpha, beta, n_range);
              const FrameBoundsEstimate est = empirical_frame_bounds(sys, trials, seed);
              py::dict d;
              d["A"] = est.A;
              d["B"] = est.B;
              d["method"] = est.method;
              d["trials"] = est.trials;
              d["seed"] = est.seed;
              d["metadata"] = est.metadata;
              return d;
          },
          py::arg("window"), py::arg("alpha"), py::arg("beta"), py::arg("n_range"),
          py::arg("trials") = 8, py::arg("seed") = 1);

    m.def("frame_apply",
          [](const QField& f, const QField& window, double alpha, double beta,
             std::int64_t n_range, const std::string& mode) {
              const GaborSystem sys = make_gabor_system(window, alpha, beta, n_range);
              return frame_apply(f, sys,
                                 mode == "scalar" ? CoefficientMode::Scalar
                                                  : CoefficientMode::Quaternionic);
          },
          py::arg("f"), py::arg("window"), py::arg("alpha"), py::arg("beta"), py::arg("n_range"),
          py::arg("mode") = "quaternionic");

    m.def("optimal_frame_bounds",
          [](const std::string& kind, double param, double alpha, std::int64_t r, std::int64_t s,
             std::int64_t trunc, std::int64_t refine) {
              return bounds_to_dict(
                  optimal_frame_bounds(parse_window_spec(kind, param), alpha, r, s, trunc, refine));
          },
          py::arg("kind"), py::arg("param"), py::arg("alpha"), py::arg("r") = 16,
          py::arg("s") = 16, py::arg("trunc") = 10, py::arg("refine") = 0);

    m.def("frame_decision",
          [](const std::string& kind, double param, double alpha) {
              const FrameDecision d = frame_decision(parse_window_spec(kind, param), alpha);
              py::dict out = bounds_to_dict(d.bounds);
              out["verdict"] = d.verdict;
              out["analytic_zero_certificate"] = d.analytic_zero_certificate;
              return out;
          },
          py::arg("kind"), py::arg("param"), py::arg("alpha"));

    m.def("gaussian_zak_critical_value",
          [](double alpha, std::int64_t trunc) {
              const GaussianZeroReport rep = gaussian_zak_critical_value(alpha, trunc);
              py::dict d;
              d["abs_value"] = abs(rep.value);
              d["value"] = rep.value;
              d["paired_cancellation"] = rep.paired_cancellation;
              d["range"] = std::pair<std::int64_t, std::int64_t>{rep.range_lo, rep.range_hi};
              return d;
          },
          py::arg("alpha"), py::arg("trunc") = 8);

    m.def("read_qf2", &read_qf2);
    m.def("write_qf2", &write_qf2);

    m.def("verify", [](std::uint64_t seed) {
        const VerifyReport rep = run_verify_suite(seed);
        py::list lines;
        for (const VerifyLine& line : rep.lines) {
            py::dict d;
            d["name"] = line.name;
            d["defect"] = line.defect;
            d["tolerance"] = line.tolerance;
            d["pass"] = line.pass;
            lines.append(d);
        }
        py::dict d;
        d["seed"] = rep.seed;
        d["all_pass"] = rep.all_pass;
        d["lines"] = lines;
        return d;
    }, py::arg("seed") = 7);
}
