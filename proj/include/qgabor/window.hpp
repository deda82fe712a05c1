#pragma once

#include <string>

#include "qgabor/field.hpp"

namespace qgabor {

enum class WindowKind { Gaussian, Box, Hat };

/// Catalog of real-valued windows.
///   gaussian: exp(-pi (x1^2 + x2^2)), fixed form, param ignored
///   box:      indicator of [0, param)^2, half-open
///   hat:      max(0, 1-|x1|/param) * max(0, 1-|x2|/param)
struct WindowSpec {
    WindowKind kind{WindowKind::Gaussian};
    double param{1.0};
    /// Extra amplitude factor applied to the window values (1 by default;
    /// certification paths use it to renormalize).
    double amplitude{1.0};
};

WindowSpec parse_window_spec(const std::string& kind_name, double param);
std::string window_kind_name(WindowKind kind);

/// Pointwise window evaluation (used by the analytic Zak paths).
double window_value(const WindowSpec& spec, double x1, double x2);

/// Separable factor along one axis: window_value(spec, x1, x2) =
/// amplitude * window_value_1d(x1) * window_value_1d(x2).
double window_value_1d(const WindowSpec& spec, double t);

/// Samples the window on a grid; result is real-valued (x = y = z = 0).
QField sample_window(const WindowSpec& spec, const Grid2& grid);

/// Analytic squared L2 norm of the window over R^2.
double window_norm_sq(const WindowSpec& spec);

/// Copy of `spec` rescaled to unit L2 norm.
WindowSpec normalized(const WindowSpec& spec);

}  // namespace qgabor
