#pragma once

#include <string>

#include "qgabor/field.hpp"

namespace qgabor {

/// QF2 field file: magic "QF2\0", u32 version = 1, u64 n1, n2,
/// f64 x1_min, x2_min, dx1, dx2, then n1*n2*4 little-endian f64 values,
/// row-major over (a, b), component order (w, x, y, z).
/// Reads and writes round-trip bit-exactly.
void write_qf2(const std::string& path, const QField& f);
QField read_qf2(const std::string& path);

}  // namespace qgabor
