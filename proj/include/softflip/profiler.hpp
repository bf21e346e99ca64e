#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "softflip/ir.hpp"
#include "softflip/vm.hpp"

namespace softflip {

struct FunctionProfile {
    std::uint64_t calls = 0;
    std::uint64_t inclusive = 0;  // dynamic instruction count, elapsed-style
    std::uint64_t exclusive = 0;  // own-body dynamic instruction count
};

struct ProfileReport {
    std::map<std::string, FunctionProfile> per_function;  // called functions only
    std::vector<ProfileSink::SiteCounters> per_site;      // every static site
    std::uint64_t total_dynamic = 0;
};

// Fault-free profiling run; dynamic instruction count is the time proxy.
// Throws BenchmarkDefect if the program does not halt.
ProfileReport profile(const Program& p, std::span<const Word> input, std::uint64_t sched_seed);

struct TimeShareRow {
    std::string function;
    std::uint64_t calls = 0;
    double incl_pct = 0.0;
    double excl_pct = 0.0;
    double avg_incl = 0.0;  // inclusive / calls
    double avg_excl = 0.0;
};

// Rows sorted by inclusive share descending; ties by exclusive descending,
// then function name ascending.
std::vector<TimeShareRow> time_shares(const ProfileReport& r);

// CSV with header: function,calls,incl_pct,excl_pct,avg_incl,avg_excl
std::string time_shares_csv(const std::vector<TimeShareRow>& rows);

struct SiteStat {
    std::uint32_t site_id = 0;
    InstrClass cls = InstrClass::Arithmetic;
    std::uint64_t exec_count = 0;
    std::uint64_t read_refs = 0;   // exec_count + mem_read_count
    std::uint64_t write_mods = 0;  // dest_write_count + mem_write_count
};

std::vector<SiteStat> site_stats(const ProfileReport& r, const Program& p);

}  // namespace softflip
