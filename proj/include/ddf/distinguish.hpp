#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "ddf/digraph.hpp"
#include "ddf/family.hpp"
#include "ddf/graph.hpp"
#include "ddf/interval.hpp"

namespace ddf {

// True iff some vertex has disjoint (out-)neighborhoods in the two graphs.
// Disjointness is literal set disjointness: empty neighborhoods are disjoint
// from everything.  Throws if the graphs are equal (the notion compares a
// graph with a *different* isomorphic copy).
bool shannon_distinguishable(const LabeledGraph& f, const LabeledGraph& g);
bool shannon_distinguishable(const Digraph& f, const Digraph& g);

// Maximum number of pairwise Shannon-distinguishable labeled copies of g.
SolveReport nu(const LabeledGraph& g, std::chrono::milliseconds budget);

struct DigraphNuReport {
    Int value = 0;
    SolveReport::Status status = SolveReport::Status::Exact;
    Int copy_count = 0;
    std::vector<Digraph> witness;
    double elapsed_ms = 0.0;
    std::uint64_t nodes_explored = 0;
};

DigraphNuReport nu(const Digraph& g, std::chrono::milliseconds budget);

std::vector<Digraph> labeled_copies(const Digraph& g);

// Discrete memoryless channel: exact-rational stochastic matrix.
struct Channel {
    std::vector<std::string> inputs;   // row labels
    std::vector<std::string> outputs;  // column labels
    std::vector<Rat> w;                // row-major |X| x |Y|

    const Rat& at(int x, int y) const {
        return w[static_cast<std::size_t>(x) * outputs.size() + y];
    }
    // Rows must sum to exactly 1, entries >= 0.
    void validate() const;
};

// Digraph on X ∪ Y (inputs first, outputs relabeled after them): arcs x -> y
// where W(y|x) > 0, plus arcs from every output vertex to every other vertex.
struct ChannelDigraph {
    Digraph graph;
    std::vector<std::string> labels;  // vertex v has labels[v-1]
    int input_count = 0;
};

ChannelDigraph channel_digraph(const Channel& channel);

// Constant-composition class demo: vertices are the input sequences of the
// given composition; two sequences are distinguishable when their output
// fans (out-neighborhoods in the m-fold product) are disjoint.  The maximum
// pairwise-distinguishable set is computed by the shared clique solver; its
// m-th root is a zero-error capacity lower bound.
struct CompositionClassReport {
    int m = 0;
    std::vector<int> counts;            // per input symbol, sums to m
    std::vector<std::string> sequences; // the class, lexicographic
    Int class_size = 0;
    Int value = 0;                      // nu of the class structure
    SolveReport::Status status = SolveReport::Status::Exact;
    std::vector<std::string> witness;
    Interval rate;                      // value^(1/m)
    double elapsed_ms = 0.0;
    std::uint64_t nodes_explored = 0;
};

CompositionClassReport composition_class_nu(const Channel& channel, int m,
                                            const std::vector<int>& counts,
                                            std::chrono::milliseconds budget,
                                            int m_cap = 2);

// Empirical probe of the claim that nu(G) = 1 whenever no two vertices of G
// have disjoint neighborhoods; scans all graphs on <= max_n vertices and
// returns any counterexamples instead of asserting.
struct RemarkCounterexample {
    LabeledGraph graph;
    Int nu_value = 0;
};
std::vector<RemarkCounterexample> scan_disjoint_neighborhood_remark(int max_n);

}  // namespace ddf
