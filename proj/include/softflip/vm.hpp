#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "softflip/ir.hpp"

namespace softflip {

enum class Termination : std::uint8_t { Halted, Crashed, Hung };

enum class CrashCause : std::uint8_t {
    OobMemory, DivByZero, BadJump, JoinInvalidTid, Deadlock,
    BudgetNever,  // reserved, never emitted
};
std::string_view crash_cause_name(CrashCause c);

struct MemRegion {
    std::uint64_t start = 0;
    std::uint64_t len = 0;
    bool operator==(const MemRegion&) const = default;
};

// Storage/operation components modeled as fault-immune. The empty map is the
// baseline architecture. Protection only gates injected flips; it never
// changes program semantics.
struct ReliabilityMap {
    std::vector<std::uint32_t> reliable_registers;  // sorted, unique
    std::vector<MemRegion> reliable_regions;        // sorted by start, disjoint
    std::vector<std::uint32_t> reliable_sites;      // sorted, unique

    bool empty() const {
        return reliable_registers.empty() && reliable_regions.empty() && reliable_sites.empty();
    }
    bool covers_register(std::uint32_t r) const;
    bool covers_address(std::uint64_t addr) const;
    bool covers_site(std::uint32_t site) const;
    void normalize();  // sort, dedupe, coalesce adjacent regions
    bool operator==(const ReliabilityMap&) const = default;
};

struct RunLimits {
    std::uint64_t max_instructions = 8'000'000;
    std::uint64_t memory_words = 65'536;
};

struct ExecutionResult {
    Termination termination = Termination::Halted;
    CrashCause cause = CrashCause::BudgetNever;  // meaningful iff Crashed
    std::string output;                          // bytes appended by print
    std::uint64_t dynamic_count = 0;             // retired instructions
    std::uint64_t trace_digest = 0;              // FNV-1a64 over (site_id, tid) pairs
    std::vector<std::uint64_t> per_site_dynamic_counts;  // indexed by site_id

    bool operator==(const ExecutionResult& o) const {
        return termination == o.termination &&
               (termination != Termination::Crashed || cause == o.cause) &&
               output == o.output && dynamic_count == o.dynamic_count &&
               trace_digest == o.trace_digest &&
               per_site_dynamic_counts == o.per_site_dynamic_counts;
    }
};

// Consulted once per retirement that produces a destination value, with the
// value about to be written. A returned replacement is applied unless the
// destination is protected by the ReliabilityMap.
using FaultHook =
    std::function<std::optional<Word>(std::uint32_t site, std::uint64_t instance, Word dest)>;

// Analysis-only view of every retirement, fired after the destination write.
struct RetireEvent {
    std::uint32_t site = 0;
    std::uint32_t tid = 0;
    std::uint64_t instance = 0;  // ordinal among this run's executions of site
    bool has_dest = false;
    bool dest_is_mem = false;
    std::uint64_t dest = 0;  // register index or memory address
    Word dest_value = 0;     // value actually written
};
using RetireObserver = std::function<void(const RetireEvent&)>;

// Profiling capture, filled by run() when attached. Function rows are keyed
// by function index; "inclusive" counts every retirement (any thread) that
// occurs while the function has a live frame, mirroring elapsed-time
// profilers; "exclusive" counts retirements of the function's own body.
struct ProfileSink {
    std::vector<std::uint64_t> fn_calls;
    std::vector<std::uint64_t> fn_inclusive;
    std::vector<std::uint64_t> fn_exclusive;

    struct SiteCounters {
        std::uint64_t exec_count = 0;
        std::uint64_t dest_write_count = 0;
        std::uint64_t mem_read_count = 0;
        std::uint64_t mem_write_count = 0;
        bool touched_mem = false;
        std::uint64_t min_addr = 0;
        std::uint64_t max_addr = 0;
    };
    std::vector<SiteCounters> sites;
    std::uint64_t total_dynamic = 0;
};

struct RunOptions {
    std::span<const Word> input;
    std::uint64_t sched_seed = 0;
    RunLimits limits;
    const ReliabilityMap* rmap = nullptr;  // nullptr == baseline
    FaultHook hook;
    RetireObserver observer;
    ProfileSink* profile = nullptr;
};

// Deterministic interpretation of p: identical (p, input, sched_seed, hook)
// always yields an identical ExecutionResult. All program misbehavior is
// reported through termination; only configuration problems throw
// (ConfigError when globals+input do not fit memory).
ExecutionResult run(const Program& p, const RunOptions& opt);

struct GoldenRecord {
    ExecutionResult result;
    std::uint64_t sched_seed = 0;
    std::vector<Word> input;
};

// Fault-free reference run. Throws BenchmarkDefect unless it halts.
GoldenRecord golden_run(const Program& p, std::span<const Word> input,
                        std::uint64_t sched_seed, const RunLimits& limits = {});

// Scheduler policy, exposed for tests: round-robin over the sorted runnable
// set starting after `last` (pass UINT32_MAX for the first pick), with a
// seeded quantum in [1, 16] instructions per scheduling decision.
std::uint32_t pick_round_robin(std::span<const std::uint32_t> runnable_sorted,
                               std::uint32_t last);
std::uint64_t quantum_length(std::uint64_t sched_seed, std::uint64_t decision_index);

// Startup ABI: input words are copied right after the globals and the entry
// thread starts with r0 = input word count, r1 = input base address.
std::uint64_t input_base_address(const Program& p);

}  // namespace softflip
