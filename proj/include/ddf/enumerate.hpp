#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ddf/graph.hpp"

namespace ddf {

// Generators push each graph exactly once, in a fixed deterministic order;
// the sink returns false to stop early.  collect_* helpers materialize the
// stream sorted by canonical key (the order every downstream consumer uses).
using GraphSink = std::function<bool(const LabeledGraph&)>;

struct PartitionShape {
    std::vector<int> parts;  // non-increasing
    int n = 0;

    static PartitionShape of(std::vector<int> parts);
    // Throws unless all parts >= 3 and sum = n.
    void require_two_regular(int n) const;
    std::string to_string() const;  // "(3,3)"
};

using ShapeSink = std::function<bool(const PartitionShape&)>;

void hamilton_cycles(int n, const GraphSink& sink);
void hamilton_paths(int n, const GraphSink& sink);
void perfect_matchings(int n, const GraphSink& sink);
void near_matchings(int n, const GraphSink& sink);
void triangle_factors(int n, const GraphSink& sink);
void two_regular_graphs(int n, const std::optional<PartitionShape>& shape,
                        const GraphSink& sink);

// All partitions of n with parts >= min_part, ascending lexicographic order.
void partitions(int n, int min_part, const ShapeSink& sink);
Int partition_enumeration_count(int n, int min_part);

// Canonical pattern for a 2-regular shape: one 2-edge path per odd part on the
// lowest vertex blocks, single edges on the remaining consecutive pairs.
LabeledGraph pattern_for_shape(const PartitionShape& shape);

// Fixed canonical pattern choices used by counting checks.
LabeledGraph canonical_perfect_matching(int n);   // {1,2},{3,4},...
LabeledGraph canonical_near_matching(int n);      // path 1-2-3 + {4,5},...
LabeledGraph canonical_hamilton_cycle(int n);     // 1-2-...-n-1

// All distinct images of g under vertex permutations (including g), sorted.
std::vector<LabeledGraph> labeled_copies(const LabeledGraph& g);

struct Universe {
    enum class Kind {
        HamiltonCycles,
        HamiltonPaths,
        TwoRegular,
        PerfectMatchings,
        NearMatchings,
        TriangleFactors,
        CopiesOf,
    };
    Kind kind;
    int n = 0;
    std::optional<PartitionShape> shape;  // TwoRegular only
    std::optional<LabeledGraph> base;     // CopiesOf only

    static Universe hamilton_cycles(int n);
    static Universe hamilton_paths(int n);
    static Universe two_regular(int n, std::optional<PartitionShape> shape = {});
    static Universe perfect_matchings(int n);
    static Universe near_matchings(int n);
    static Universe triangle_factors(int n);
    static Universe copies_of(LabeledGraph g);

    std::string tag() const;
    void generate(const GraphSink& sink) const;
    // Sorted by canonical key; duplicates would be a bug and are rejected.
    std::vector<LabeledGraph> collect() const;
};

Universe parse_universe(const std::string& tag, int n,
                        const std::optional<PartitionShape>& shape = {});

// Members of the universe containing the pattern as a subgraph.
void members_containing(const LabeledGraph& pattern, const Universe& universe,
                        const GraphSink& sink);
std::vector<LabeledGraph> collect_members_containing(const LabeledGraph& pattern,
                                                     const Universe& universe);

struct MinimalCovering {
    LabeledGraph host;   // the Hamilton cycle
    LabeledGraph cover;  // subset of host's edges
    int component_count = 0;  // s
    int two_edge_paths = 0;   // n - 2s
};

using CoveringSink = std::function<bool(const MinimalCovering&)>;

// Every inclusion-minimal subset of the cycle's edges covering all vertices.
void minimal_coverings(const LabeledGraph& hamilton_cycle, const CoveringSink& sink);
std::vector<MinimalCovering> collect_minimal_coverings(const LabeledGraph& hamilton_cycle);

}  // namespace ddf
