#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "softflip/fault.hpp"
#include "softflip/vm.hpp"

namespace softflip {

enum class OutcomeTag : std::uint8_t { Crash, Sdc, Hang, Benign };
std::string_view outcome_tag_name(OutcomeTag t);

struct Outcome {
    OutcomeTag tag = OutcomeTag::Benign;
    std::optional<CrashCause> crash_cause;            // Crash only
    std::optional<std::uint64_t> divergence_offset;   // Sdc only: first differing byte

    bool operator==(const Outcome&) const = default;
};

// Trial result vs. the golden run: crash / hang from termination, otherwise
// byte-exact output comparison decides sdc vs benign.
Outcome classify(const ExecutionResult& trial, const GoldenRecord& golden);

struct TagCounts {
    std::uint64_t crash = 0;
    std::uint64_t sdc = 0;
    std::uint64_t hang = 0;
    std::uint64_t benign = 0;

    std::uint64_t total() const { return crash + sdc + hang + benign; }
    std::uint64_t non_benign() const { return crash + sdc + hang; }
    void add(OutcomeTag t);
    TagCounts& operator+=(const TagCounts& o);
    bool operator==(const TagCounts&) const = default;
};

struct OutcomeHistogram {
    TagCounts totals;
    std::map<InstrClass, TagCounts> by_class;  // keyed by the faulted site's class
    std::map<int, TagCounts> by_width;         // keyed by FaultSpec.width

    std::uint64_t total() const { return totals.total(); }
    // Associative, commutative merge; enables parallel reduction.
    OutcomeHistogram& merge(const OutcomeHistogram& o);
    bool operator==(const OutcomeHistogram&) const = default;
};

OutcomeHistogram aggregate(std::span<const std::pair<FaultSpec, Outcome>> outcomes,
                           const Program& p);

}  // namespace softflip
