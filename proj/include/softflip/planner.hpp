#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "softflip/profiler.hpp"
#include "softflip/vm.hpp"

namespace softflip {

// Latency in cycles, energy in pJ, per access. Values are configuration,
// not asserted technology ground truth; defaults keep the qualitative
// ordering (slow, energy-hungry reliable writes; reads on par).
struct TechParams {
    double sram_write_latency = 1.0;
    double stt_write_latency = 5.0;
    double sram_read_latency = 1.0;
    double stt_read_latency = 1.0;
    double sram_write_energy = 1.0;
    double stt_write_energy = 10.0;
    double sram_read_energy = 1.0;
    double stt_read_energy = 1.0;

    void validate() const;  // throws ConfigError
    bool operator==(const TechParams&) const = default;
};

// Selection priority of one site: frequently referenced, rarely modified
// values gain the most from fault-immune storage; thread primitives are
// always protected.
struct SiteScore {
    std::uint32_t site_id = 0;
    double score = 0.0;  // read_refs / (write_mods + 1)
    bool forced = false;

    bool operator==(const SiteScore&) const = default;
};

// Sorted descending by (forced, score, -site_id).
std::vector<SiteScore> score_sites(std::span<const SiteStat> stats);

struct PlanBudget {
    double site_fraction = 0.35;       // in (0, 1]
    std::uint32_t register_count = 12;
    std::uint64_t memory_words = 4096;

    bool operator==(const PlanBudget&) const = default;
};

struct ReliabilityPlan {
    ReliabilityMap map;
    PlanBudget budget;
    TechParams tech;
    std::vector<SiteScore> scores;  // provenance, selection order

    bool operator==(const ReliabilityPlan&) const = default;
};

// Greedy selection under the budget: forced sites first, then by score until
// ceil(site_fraction * N) sites are reliable. Reliable registers are the
// destination registers of selected sites ranked by write frequency;
// reliable regions are the globals touched by selected load/store sites,
// coalesced, within the word budget. Throws ConfigError when forced sites
// alone exceed the site budget.
ReliabilityPlan build_plan(std::span<const SiteScore> scores, const Program& p,
                           const ProfileReport& profile, const PlanBudget& budget,
                           const TechParams& tech = {});

struct OverheadReport {
    double delta_cycles = 0.0;
    double delta_energy_pj = 0.0;
    double slowdown = 0.0;  // delta_cycles / total_dynamic (1 cycle per instr baseline)

    bool operator==(const OverheadReport&) const = default;
};

OverheadReport estimate_overhead(const ProfileReport& profile, const ReliabilityPlan& plan,
                                 const TechParams& params);

// JSON round-trip ({reliable_sites, reliable_registers, regions, tech, provenance}).
std::string plan_to_json(const ReliabilityPlan& plan);
ReliabilityPlan plan_from_json(const std::string& text);  // throws ConfigError

}  // namespace softflip
