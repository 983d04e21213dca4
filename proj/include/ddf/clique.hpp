#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "ddf/kernels.hpp"

namespace ddf {

struct CliqueResult {
    int size = 0;
    std::vector<int> members;  // ascending vertex indices
    bool exact = true;         // false when the budget ran out
    std::uint64_t nodes = 0;
    double elapsed_ms = 0.0;
};

// Exact maximum clique: branch and bound with greedy-coloring upper bounds.
// Deterministic (single-threaded, fixed expansion order), so repeated runs
// return the identical witness.  With a budget, returns the best clique found
// so far and exact=false once time runs out.
CliqueResult max_clique(const BitMatrix& adjacency,
                        std::optional<std::chrono::milliseconds> budget = {});

}  // namespace ddf
