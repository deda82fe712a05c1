#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qgabor {

struct VerifyLine {
    std::string name;
    double defect{0.0};
    double tolerance{0.0};
    bool pass{false};
};

struct VerifyReport {
    std::uint64_t seed{0};
    std::vector<VerifyLine> lines;
    bool all_pass{true};
};

/// Runs the full property suite over the transform and frame identities,
/// one line per identity, each with its measured defect and tolerance.
/// Deterministic for a fixed seed.
VerifyReport run_verify_suite(std::uint64_t seed);

/// Fixed-format table; byte-identical for identical reports.
std::string format_verify_table(const VerifyReport& report);

}  // namespace qgabor
