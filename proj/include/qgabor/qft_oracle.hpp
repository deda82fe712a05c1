#pragma once

#include <stdexcept>

#include "qgabor/field.hpp"

namespace qgabor {

/// Direct O(N^4) evaluation of the two-sided transform using quaternion
/// multiplication only. Deliberately shares no code with the fast path;
/// compiled into test binaries only. The size guard keeps accidental large
/// runs out of test suites; pass allow_large to override.
inline QField qft_oracle(const QField& f, bool allow_large = false) {
    const Grid2& g = f.grid();
    if (!allow_large && g.n1 * g.n2 > 64 * 64)
        throw std::invalid_argument("qft_oracle: size guard exceeded (pass allow_large to override)");
    const Grid2 rg = reciprocal_grid(g);
    QField out(rg);
    const double two_pi = 6.283185307179586476925286766559;
    const double area = g.cell_area();
    for (std::int64_t u = 0; u < rg.n1; ++u) {
        const double w1 = static_cast<double>(u) * rg.dx1;
        for (std::int64_t v = 0; v < rg.n2; ++v) {
            const double w2 = static_cast<double>(v) * rg.dx2;
            Quaternion acc{};
            for (std::int64_t a = 0; a < g.n1; ++a) {
                const Quaternion left = exp_i(-two_pi * g.x1(a) * w1);
                for (std::int64_t b = 0; b < g.n2; ++b) {
                    const Quaternion right = exp_j(-two_pi * g.x2(b) * w2);
                    acc += mul(mul(left, f.at(a, b)), right);
                }
            }
            out.at(u, v) = acc * area;
        }
    }
    return out;
}

}  // namespace qgabor
