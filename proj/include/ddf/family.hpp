#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "ddf/bounds.hpp"
#include "ddf/clique.hpp"
#include "ddf/enumerate.hpp"
#include "ddf/graph.hpp"

namespace ddf {

// A selected subfamily of a candidate universe whose members pairwise satisfy
// the doubling predicate under union.
struct Family {
    int n = 0;
    DoublingPredicate predicate;
    std::string universe_tag;
    std::vector<LabeledGraph> members;

    std::size_t size() const { return members.size(); }
};

struct VerifyResult {
    bool ok = false;
    std::string reason;  // empty when ok
    // indices into members of the first offending pair, canonical order
    std::optional<std::pair<int, int>> failing_pair;
};

VerifyResult verify_family(const Family& fam);

struct CompatibilityGraph {
    int order = 0;
    BitMatrix adjacency;
    std::vector<std::string> candidate_keys;
};

CompatibilityGraph compatibility_graph(std::span<const LabeledGraph> candidates,
                                       const DoublingPredicate& pred);

// First-fit selection over the canonical stream: pick the first surviving
// candidate, drop everything incompatible with it, repeat.
Family greedy_family(std::span<const LabeledGraph> canonical_candidates,
                     const DoublingPredicate& pred, const std::string& universe_tag);

// True iff no eliminated candidate is compatible with every chosen member.
bool is_inclusion_maximal(const Family& fam, std::span<const LabeledGraph> candidates);

struct SolveReport {
    enum class Status { Exact, LowerBound };
    Int value = 0;
    Status status = Status::Exact;
    Family witness;
    double elapsed_ms = 0.0;
    std::uint64_t nodes_explored = 0;

    std::string status_name() const {
        return status == Status::Exact ? "exact" : "lower-bound";
    }
};

SolveReport max_family_exact(std::span<const LabeledGraph> candidates,
                             const DoublingPredicate& pred,
                             std::chrono::milliseconds budget,
                             const std::string& universe_tag);

// All triangle factors when 3 | n; otherwise triangle factors on [3q] glued to
// the fixed increasing cycle on the top r vertices (n = 3q + r, r in {4,5}).
Family triangle_family(int n);

enum class PatternKind { Matching, NearMatching, ShapePattern };

struct CoverBoundReport {
    PatternKind kind;
    int n = 0;
    std::optional<PartitionShape> shape;
    Rat bound;                  // the headline upper bound for this pattern kind
    Int universe_size = 0;
    Int pattern_count = 0;      // distinct patterns (copies) considered
    Int class_size_min = 0, class_size_max = 0;  // |C(pattern)| over patterns
    bool class_sizes_uniform = false;
    Int copies_min = 0, copies_max = 0;  // patterns contained per member
    bool member_copies_uniform = false;
};

// Exhaustive containment counting behind the double-counting bound.  For
// Matching/NearMatching the bound is n!/(floor(n/2)! 2^floor(n/2)); for a
// shape pattern it is |F(p)| / |C(p)| from the true enumerated counts.
CoverBoundReport cover_upper_bound(int n, PatternKind kind,
                                   const std::optional<PartitionShape>& shape = {});

// Every valid family meets each containment class C(pattern) at most once.
// Returns the first pattern violated, if any.
std::optional<LabeledGraph> family_hits_class_twice(const Family& fam,
                                                    std::span<const LabeledGraph> patterns);

// Hamilton-path family obtained by dropping the edge {a,b} from every member
// of the cycle family containing it.
Family drop_edge_paths(const Family& cycle_family, Edge ab);

struct SandwichReport {
    int n = 0;
    SolveReport cycles;  // exact max over Hamilton cycles
    SolveReport paths;   // exact max over Hamilton paths
    Edge best_edge{0, 0};
    Int best_edge_class_size = 0;  // members of the optimal cycle family through best_edge
    Rat ratio_target;              // (2/(n-1)) * cycle value
    bool paths_reach_ratio = false;
    bool cycles_ge_paths = false;  // reported, not asserted
};

SandwichReport cycle_path_sandwich(int n, std::chrono::milliseconds budget);

// Hamilton cycles whose common edges with h cover all of [n] (h included).
long incompatible_count(const LabeledGraph& h);
long incompatible_count(const LabeledGraph& h, std::span<const LabeledGraph> cycles);

}  // namespace ddf
