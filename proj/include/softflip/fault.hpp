#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "softflip/ir.hpp"
#include "softflip/vm.hpp"

namespace softflip {

// Which static sites are eligible for injection. Filters intersect.
struct Selector {
    std::array<bool, kInstrClassCount> classes{};  // at least one set
    std::optional<std::vector<std::uint32_t>> site_filter;

    static Selector all();
    static Selector only(InstrClass c);
    bool wants(InstrClass c) const { return classes[static_cast<std::size_t>(c)]; }
    bool operator==(const Selector&) const = default;
};

struct FaultModel {
    enum class Kind : std::uint8_t { Seu, Mbu };
    Kind kind = Kind::Seu;
    // MBU only: flipped-bit-count distribution over widths in [2, 8].
    std::map<int, double> mbu_widths;

    static FaultModel seu();
    static FaultModel mbu();  // default widths: uniform over {2, 3, 4}
    static FaultModel mbu_fixed_width(int width);
    void validate() const;  // throws ConfigError
    bool operator==(const FaultModel&) const = default;
};

// A fully determined perturbation: flip `width` contiguous bits starting at
// `start_bit` in the destination value of the dynamic_instance-th execution
// of site_id.
struct FaultSpec {
    std::uint32_t site_id = 0;
    std::uint64_t dynamic_instance = 0;
    int start_bit = 0;
    int width = 1;
    std::uint64_t rng_seed = 0;  // provenance

    bool operator==(const FaultSpec&) const = default;
};

struct CandidateSet {
    // (site_id, dynamic count) sorted by site_id; counts > 0.
    std::vector<std::pair<std::uint32_t, std::uint64_t>> sites;
    std::uint64_t total_instances = 0;
};

// Step 1: sites matching the selector that executed at least once in the
// golden run and carry a writable destination. Throws ConfigError when empty.
CandidateSet enumerate_candidates(const GoldenRecord& golden, const Program& p,
                                  const Selector& sel);

// Step 3 site/instance/bit choice: uniform over all dynamic instances
// (sites weighted by dynamic count), then bit position; MBU widths sampled
// from the model's distribution. Deterministic given seed.
FaultSpec draw_fault(const CandidateSet& cands, const FaultModel& model, std::uint64_t seed);

// XOR with `width` contiguous 1-bits from start_bit; involution.
constexpr Word apply_flip(Word w, int start_bit, int width) {
    const Word ones = (width >= 64) ? ~Word{0} : ((Word{1} << width) - 1);
    return w ^ (ones << start_bit);
}

// Internal invariant violation: the targeted dynamic instance was never
// reached. Cannot occur for specs drawn against the same golden run.
struct InjectionUnreachable : std::logic_error {
    using std::logic_error::logic_error;
};

// Replays (p, input, sched_seed) with a hook that flips the destination value
// of exactly (spec.site_id, spec.dynamic_instance); the flip is silently
// masked when the destination is protected by rmap.
ExecutionResult inject_run(const Program& p, std::span<const Word> input,
                           std::uint64_t sched_seed, const FaultSpec& spec,
                           const ReliabilityMap& rmap, const RunLimits& limits);

// Trial budget policy: ten golden lengths, floor 100k.
std::uint64_t trial_budget(std::uint64_t golden_dynamic_count);

}  // namespace softflip
