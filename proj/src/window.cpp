#include "qgabor/window.hpp"

#include <cmath>
#include <stdexcept>

namespace qgabor {

namespace {
constexpr double kPi = 3.1415926535897932384626433832795;
}

WindowSpec parse_window_spec(const std::string& kind_name, double param) {
    WindowSpec spec;
    spec.param = param;
    if (kind_name == "gaussian")
        spec.kind = WindowKind::Gaussian;
    else if (kind_name == "box")
        spec.kind = WindowKind::Box;
    else if (kind_name == "hat")
        spec.kind = WindowKind::Hat;
    else
        throw std::invalid_argument("unknown window kind: " + kind_name);
    if (spec.kind != WindowKind::Gaussian && !(param > 0.0))
        throw std::invalid_argument("window parameter must be positive");
    return spec;
}

std::string window_kind_name(WindowKind kind) {
    switch (kind) {
        case WindowKind::Gaussian: return "gaussian";
        case WindowKind::Box: return "box";
        case WindowKind::Hat: return "hat";
    }
    return "?";
}

double window_value_1d(const WindowSpec& spec, double t) {
    switch (spec.kind) {
        case WindowKind::Gaussian:
            return std::exp(-kPi * t * t);
        case WindowKind::Box:
            return (t >= 0.0 && t < spec.param) ? 1.0 : 0.0;
        case WindowKind::Hat: {
            const double u = 1.0 - std::fabs(t) / spec.param;
            return u > 0.0 ? u : 0.0;
        }
    }
    return 0.0;
}

double window_value(const WindowSpec& spec, double x1, double x2) {
    return spec.amplitude * window_value_1d(spec, x1) * window_value_1d(spec, x2);
}

QField sample_window(const WindowSpec& spec, const Grid2& grid) {
    QField f(grid);
    for (std::int64_t a = 0; a < grid.n1; ++a) {
        const double v1 = window_value_1d(spec, grid.x1(a));
        for (std::int64_t b = 0; b < grid.n2; ++b)
            f.at(a, b) = Quaternion::real(spec.amplitude * v1 * window_value_1d(spec, grid.x2(b)));
    }
    return f;
}

double window_norm_sq(const WindowSpec& spec) {
    double axis = 0.0;
    switch (spec.kind) {
        case WindowKind::Gaussian:
            // int exp(-2 pi t^2) dt = 1/sqrt(2)
            axis = 1.0 / std::sqrt(2.0);
            break;
        case WindowKind::Box:
            axis = spec.param;
            break;
        case WindowKind::Hat:
            // int (1 - |t|/a)^2 dt = 2a/3
            axis = 2.0 * spec.param / 3.0;
            break;
    }
    return spec.amplitude * spec.amplitude * axis * axis;
}

WindowSpec normalized(const WindowSpec& spec) {
    WindowSpec out = spec;
    out.amplitude = spec.amplitude / std::sqrt(window_norm_sq(spec));
    return out;
}

}  // namespace qgabor
