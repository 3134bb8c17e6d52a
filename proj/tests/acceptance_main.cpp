// Acceptance suite: runs the nine reference claims end to end on the
// bundled presentation and prints one line per criterion. Exit status 0
// only if every criterion holds.

#include <cstdio>
#include <exception>

#include "wlab/verify.hpp"

int main() {
    try {
        wlab::RunConfig cfg;  // bundled presentation, k = 1..4
        wlab::VerificationSummary summary = wlab::verify_claims(cfg);

        int criterion = 0;
        bool ok = true;
        for (const auto& claim : summary.claims) {
            ++criterion;
            const char* tag = claim.status == wlab::ClaimStatus::Fail ? "FAIL"
                              : claim.status == wlab::ClaimStatus::CorrectedTypo
                                  ? "PASS (corrected source misprint)"
                                  : "PASS";
            std::printf("criterion %d [%s] %s\n    %s\n", criterion, tag, claim.id.c_str(),
                        claim.detail.c_str());
            ok = ok && claim.passed();
        }
        std::printf("acceptance: %s (%d criteria)\n", ok ? "ALL PASSED" : "FAILURES PRESENT",
                    criterion);
        return ok ? 0 : 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "acceptance: fatal error: %s\n", e.what());
        return 2;
    }
}
