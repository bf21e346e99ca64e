#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "softflip/fault.hpp"
#include "softflip/outcome.hpp"
#include "softflip/planner.hpp"
#include "softflip/vm.hpp"

namespace softflip {

enum class Arch : std::uint8_t { Baseline, Protected };

struct CampaignConfig {
    std::string benchmark;          // corpus name, or a path ending in .ir
    std::vector<Word> input;        // empty == benchmark default
    std::uint64_t trials = 1000;
    FaultModel model = FaultModel::mbu();
    Selector selector = Selector::all();
    std::uint64_t master_seed = 1;
    Arch arch = Arch::Baseline;
    std::optional<ReliabilityPlan> plan;  // required for Protected
    std::size_t workers = 0;        // 0 == automatic (SOFTFLIP_WORKERS / hardware)
};

struct TrialRecord {
    std::uint64_t index = 0;
    std::uint64_t seed = 0;
    FaultSpec spec;
    Outcome outcome;
    bool dest_protected = false;  // the plan covers this fault's destination

    bool operator==(const TrialRecord&) const = default;
};

// Exact coverage of a plan over a candidate set: per-site protection is
// static except for stores, whose addresses are taken from a golden replay.
struct CoverageIndex {
    struct SiteCoverage {
        std::uint32_t site_id = 0;
        bool all = false;
        std::vector<bool> per_instance;  // stores with partial region coverage
    };
    std::vector<SiteCoverage> sites;  // aligned with CandidateSet order
    std::uint64_t protected_instances = 0;
    std::uint64_t total_instances = 0;

    double q() const {
        return total_instances == 0
                   ? 0.0
                   : static_cast<double>(protected_instances) / static_cast<double>(total_instances);
    }
    bool covers(const CandidateSet& cands, const FaultSpec& spec) const;
};

CoverageIndex compute_coverage(const Program& p, const GoldenRecord& golden,
                               const CandidateSet& cands, const ReliabilityMap& rmap,
                               const RunLimits& limits);

struct CampaignReport {
    CampaignConfig config;
    std::uint64_t sched_seed = 0;
    // Golden provenance.
    std::uint64_t golden_dynamic_count = 0;
    std::uint64_t golden_trace_digest = 0;
    std::uint64_t golden_output_bytes = 0;
    std::uint64_t golden_output_fnv = 0;
    std::uint64_t budget = 0;
    OutcomeHistogram histogram;
    std::vector<TrialRecord> log;
    double coverage_q = 0.0;                  // Protected only
    std::optional<OverheadReport> overhead;   // Protected only
    double wall_clock_ms = 0.0;               // excluded from determinism comparisons
};

// End-to-end campaign: golden run, candidate selection, `trials` seeded
// injections (seed_i = derive_seed(master_seed, i)), classification,
// aggregation. Deterministic for a fixed config regardless of worker count.
// Throws ConfigError / BenchmarkDefect.
CampaignReport run_campaign(const CampaignConfig& cfg);

struct ResilienceDelta {
    std::string benchmark;
    std::uint64_t trials = 0;
    std::uint64_t baseline_non_benign = 0;
    std::uint64_t protected_non_benign = 0;
    double baseline_rate = 0.0;
    double protected_rate = 0.0;
    double relative_reduction = 0.0;  // 1 - protected/baseline (0 when baseline is 0)
    std::uint64_t masked_trials = 0;  // trials whose fault destination the plan covers
    double masked_fraction = 0.0;
    double coverage_q = 0.0;
};

// Paired same-seed comparison. Refuses (ConfigError) on any pairing mismatch;
// throws logic_error if a plan-covered trial is not benign in the protected run.
ResilienceDelta compare_arch(const CampaignReport& base, const CampaignReport& prot);

// Deterministic JSON (sorted keys); wall_clock_ms carried separately so that
// reports are byte-comparable. CSV: one row per trial.
std::string report_to_json(const CampaignReport& r, bool include_wall_clock = true);
CampaignReport report_from_json(const std::string& text);  // throws ConfigError
std::string report_to_csv(const CampaignReport& r);
std::string delta_to_json(const ResilienceDelta& d);

enum class ReportFormat : std::uint8_t { Json, Csv };
void emit_report(const CampaignReport& r, ReportFormat fmt, const std::string& path);
void emit_delta(const ResilienceDelta& d, const std::string& path);

// Re-derives the histogram from a serialized report's trial log and checks it
// against the stored one. Throws ConfigError on mismatch.
OutcomeHistogram summarize(const std::string& report_json);

// Resolves cfg.benchmark to a parsed program + input (corpus or .ir file).
Program load_campaign_program(const CampaignConfig& cfg, std::vector<Word>& input_out);

std::size_t effective_workers(std::size_t requested);

}  // namespace softflip
