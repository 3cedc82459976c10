#pragma once

#include <string>
#include <vector>

namespace qcvol {

struct VerifyOptions {
    int reduced_max = 12; // cap for the reduced-program sweeps
    int full_max = 4;     // cap for the per-vertex program sweep (<= 6)
    bool corrupt_closed_form = false; // test hook: offsets closed-form volumes
};

struct VerifyLine {
    std::string check;
    bool pass = false;
    std::string detail; // both values on a mismatch
};

struct VerifyReport {
    std::vector<VerifyLine> lines;
    bool all_pass() const;
};

/// Cross-checks the closed-form solver against the exact simplex oracle:
/// value agreement on the reduced programs, the full equivalence chain on
/// small dimensions, strong duality with complementary slackness, dual-form
/// fidelity, the two dual pinning identities, branch behavior of the top
/// step, grid realizations, and primal recovery.
VerifyReport run_verification(const VerifyOptions& options);

} // namespace qcvol
