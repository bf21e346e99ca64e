#pragma once

#include <string>
#include <vector>

#include "softflip/ir.hpp"

namespace softflip {

// A bundled benchmark: IR source plus the default input block.
struct Benchmark {
    std::string name;
    std::string source;
    std::vector<Word> default_input;
};

const std::vector<Benchmark>& corpus();
const Benchmark* find_benchmark(const std::string& name);  // nullptr if unknown
std::vector<std::string> corpus_names();

}  // namespace softflip
