#pragma once

#include "ubb/certify.hpp"
#include "ubb/subspace.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ubb {

struct ClaimInfo {
    std::string id;
    std::string description;
};

// Every claim id the CLI can certify, each with a one-line description.
const std::vector<ClaimInfo>& claim_registry();
bool is_known_claim(const std::string& id);

// Closed-form state counts and complement dimensions per set kind.
int expected_count(int d, BasisKind kind);
int expected_complement_dim(int d, BasisKind kind);

struct ReportConfig {
    int d = 3;
    CompletionScheme scheme = CompletionScheme::standard;
    std::uint64_t seed = 20240901;
    int restarts = 200;
    int jobs = 1;
    int samples = 50;
};

struct TimedStage {
    std::string name;
    double ms = 0.0;
};

// Full certification run: deterministic apart from the timing block.
struct Report {
    std::string version;
    ReportConfig config;
    std::vector<Certificate> certificates;
    std::vector<std::pair<std::string, RankProfile>> profiles;
    std::vector<std::pair<std::string, PTReport>> pt_reports;
    std::vector<TimedStage> timings;

    bool all_pass() const;
};

// Claim-level certificates assembled from the exact machinery.
Certificate certify_counts(int d, CompletionScheme scheme);
Certificate certify_ppt(const BasisSet& basis);
Certificate certify_distill(const BasisSet& basis);

std::string certificate_text(const Certificate& cert);
std::string to_text(const Report& report);
std::string to_json_text(const Report& report);

Report run_full_report(const ReportConfig& config);

}  // namespace ubb
