#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ddf/digraph.hpp"
#include "ddf/graph.hpp"

namespace ddf {

// Symmetric boolean relation over candidate indices, packed row-major.
struct BitMatrix {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> bits;

    BitMatrix() = default;
    explicit BitMatrix(int n) : n(n), words((n + 63) / 64), bits(static_cast<std::size_t>(n) * words, 0) {}

    bool get(int i, int j) const {
        return (bits[static_cast<std::size_t>(i) * words + j / 64] >> (j % 64)) & 1u;
    }
    void set(int i, int j) {
        bits[static_cast<std::size_t>(i) * words + j / 64] |= 1ull << (j % 64);
    }
    std::span<const std::uint64_t> row(int i) const {
        return {bits.data() + static_cast<std::size_t>(i) * words,
                static_cast<std::size_t>(words)};
    }
    bool operator==(const BitMatrix&) const = default;
    std::size_t edge_count() const;  // set pairs i<j
};

// Pairwise doubling-compatibility over a candidate list.  The serial variant
// is the literal reference (union -> degree profile -> predicate); the
// parallel variant distributes rows over OpenMP threads and short-circuits
// through the isolated-vertex formulation where it provably coincides.
// Both produce identical matrices.
BitMatrix compatibility_matrix_serial(std::span<const LabeledGraph> candidates,
                                      const DoublingPredicate& pred);
BitMatrix compatibility_matrix_parallel(std::span<const LabeledGraph> candidates,
                                        const DoublingPredicate& pred);

// Pairwise Shannon distinguishability over distinct graphs/digraphs.
BitMatrix distinguishability_matrix_serial(std::span<const LabeledGraph> copies);
BitMatrix distinguishability_matrix_parallel(std::span<const LabeledGraph> copies);
BitMatrix distinguishability_matrix_serial(std::span<const Digraph> copies);
BitMatrix distinguishability_matrix_parallel(std::span<const Digraph> copies);

struct ContainmentCounts {
    std::vector<long> per_pattern;  // members containing pattern p
    std::vector<long> per_member;   // patterns contained in member g
};

ContainmentCounts containment_counts_serial(std::span<const LabeledGraph> patterns,
                                            std::span<const LabeledGraph> members);
ContainmentCounts containment_counts_parallel(std::span<const LabeledGraph> patterns,
                                              std::span<const LabeledGraph> members);

// Cycles whose common edge set with h covers every vertex (h itself counts).
long covering_incompatible_count(const LabeledGraph& h,
                                 std::span<const LabeledGraph> cycles);

}  // namespace ddf
