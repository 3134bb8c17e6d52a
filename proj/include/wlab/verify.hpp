#pragma once

#include <string>
#include <vector>

#include "wlab/pipeline.hpp"

namespace wlab {

enum class ClaimStatus { Pass, Fail, CorrectedTypo };

struct Claim {
    std::string id;
    std::string anchor;  // the reference fact the claim checks
    ClaimStatus status = ClaimStatus::Fail;
    std::string detail;

    bool passed() const { return status != ClaimStatus::Fail; }
};

struct VerificationSummary {
    std::vector<Claim> claims;

    bool all_passed() const;
};

/// The nine reference claims: eight on the H1 pipeline (group shape,
/// subgroup census, character table, the five permutation characters and
/// their decompositions, closed forms, dims, structural properties and
/// determinism) plus the small-group cross-checks.
VerificationSummary verify_claims(const RunConfig& cfg);

/// Destination files for the verification summary; empty strings skip.
struct EmitPaths {
    std::string json;
    std::string csv;
    std::string markdown;
};

/// Run verification end to end and write the summary in the configured
/// formats. If the computation itself throws, a FAILED marker is written to
/// the requested paths before the exception propagates.
VerificationSummary run_pipeline(const RunConfig& cfg, const EmitPaths& paths = {});

std::string verification_text(const VerificationSummary& summary);
std::string verification_json(const VerificationSummary& summary);
std::string verification_csv(const VerificationSummary& summary);

}  // namespace wlab
