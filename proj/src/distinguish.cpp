#include "ddf/distinguish.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ddf {

bool shannon_distinguishable(const LabeledGraph& f, const LabeledGraph& g) {
    if (f.n() != g.n())
        throw std::invalid_argument("vertex count mismatch: " + std::to_string(f.n()) + " vs " +
                                    std::to_string(g.n()));
    if (f == g) throw std::invalid_argument("distinguishability compares two different graphs");
    for (int v = 1; v <= f.n(); ++v)
        if ((f.neighbor_mask(v) & g.neighbor_mask(v)) == 0) return true;
    return false;
}

bool shannon_distinguishable(const Digraph& f, const Digraph& g) {
    if (f.n() != g.n()) throw std::invalid_argument("vertex count mismatch");
    if (f == g) throw std::invalid_argument("distinguishability compares two different digraphs");
    for (int v = 1; v <= f.n(); ++v) {
        auto rf = f.out_row(v), rg = g.out_row(v);
        bool disjoint = true;
        for (std::size_t w = 0; w < rf.size(); ++w)
            if (rf[w] & rg[w]) {
                disjoint = false;
                break;
            }
        if (disjoint) return true;
    }
    return false;
}

SolveReport nu(const LabeledGraph& g, std::chrono::milliseconds budget) {
    if (budget.count() <= 0) throw std::invalid_argument("budget must be positive");
    std::vector<LabeledGraph> copies = labeled_copies(g);
    BitMatrix adj = distinguishability_matrix_parallel(copies);
    CliqueResult clique = max_clique(adj, budget);
    SolveReport report;
    report.witness.n = g.n();
    report.witness.predicate = DoublingPredicate::max_degree_at_least(4);
    report.witness.universe_tag = Universe::copies_of(g).tag();
    report.value = clique.size;
    report.status = clique.exact ? SolveReport::Status::Exact : SolveReport::Status::LowerBound;
    report.nodes_explored = clique.nodes;
    report.elapsed_ms = clique.elapsed_ms;
    for (int idx : clique.members) report.witness.members.push_back(copies[idx]);
    std::sort(report.witness.members.begin(), report.witness.members.end());
    return report;
}

std::vector<Digraph> labeled_copies(const Digraph& g) {
    int n = g.n();
    if (n > 10)
        throw std::invalid_argument("copy universe for n = " + std::to_string(n) +
                                    " is beyond exhaustive reach (cap 10)");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::set<Digraph> seen;
    do {
        seen.insert(relabel(g, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {seen.begin(), seen.end()};
}

DigraphNuReport nu(const Digraph& g, std::chrono::milliseconds budget) {
    if (budget.count() <= 0) throw std::invalid_argument("budget must be positive");
    std::vector<Digraph> copies = labeled_copies(g);
    BitMatrix adj = distinguishability_matrix_parallel(copies);
    CliqueResult clique = max_clique(adj, budget);
    DigraphNuReport report;
    report.value = clique.size;
    report.status = clique.exact ? SolveReport::Status::Exact : SolveReport::Status::LowerBound;
    report.copy_count = static_cast<long>(copies.size());
    report.nodes_explored = clique.nodes;
    report.elapsed_ms = clique.elapsed_ms;
    for (int idx : clique.members) report.witness.push_back(copies[idx]);
    std::sort(report.witness.begin(), report.witness.end());
    return report;
}

void Channel::validate() const {
    if (inputs.empty() || outputs.empty())
        throw std::invalid_argument("channel alphabets must be nonempty");
    if (w.size() != inputs.size() * outputs.size())
        throw std::invalid_argument("channel matrix size mismatch");
    for (std::size_t x = 0; x < inputs.size(); ++x) {
        Rat sum = 0;
        for (std::size_t y = 0; y < outputs.size(); ++y) {
            const Rat& p = w[x * outputs.size() + y];
            if (p < 0)
                throw std::invalid_argument("negative probability in row \"" + inputs[x] + "\"");
            sum += p;
        }
        if (sum != 1)
            throw std::invalid_argument("row \"" + inputs[x] + "\" sums to " + rat_str(sum) +
                                        ", expected 1");
    }
}

ChannelDigraph channel_digraph(const Channel& channel) {
    channel.validate();
    int nx = static_cast<int>(channel.inputs.size());
    int ny = static_cast<int>(channel.outputs.size());
    ChannelDigraph out;
    out.input_count = nx;
    out.graph = Digraph(nx + ny);
    out.labels.reserve(nx + ny);
    for (const auto& s : channel.inputs) out.labels.push_back("x:" + s);
    for (const auto& s : channel.outputs) out.labels.push_back("y:" + s);
    for (int x = 0; x < nx; ++x)
        for (int y = 0; y < ny; ++y)
            if (channel.at(x, y) > 0) out.graph.add_arc(x + 1, nx + y + 1);
    for (int y = 0; y < ny; ++y)
        for (int v = 1; v <= nx + ny; ++v)
            if (v != nx + y + 1) out.graph.add_arc(nx + y + 1, v);
    return out;
}

namespace {

// Lexicographic sequences over symbol indices with the exact composition.
void class_sequences_rec(const std::vector<int>& remaining, std::vector<int>& seq, int m,
                         std::vector<std::vector<int>>& out) {
    if (static_cast<int>(seq.size()) == m) {
        out.push_back(seq);
        return;
    }
    for (std::size_t s = 0; s < remaining.size(); ++s) {
        if (remaining[s] == 0) continue;
        auto rem = remaining;
        --rem[s];
        seq.push_back(static_cast<int>(s));
        class_sequences_rec(rem, seq, m, out);
        seq.pop_back();
    }
}

std::string sequence_label(const Channel& ch, const std::vector<int>& seq) {
    std::string s;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) s += ".";
        s += ch.inputs[seq[i]];
    }
    return s;
}

}  // namespace

CompositionClassReport composition_class_nu(const Channel& channel, int m,
                                            const std::vector<int>& counts,
                                            std::chrono::milliseconds budget, int m_cap) {
    channel.validate();
    if (budget.count() <= 0) throw std::invalid_argument("budget must be positive");
    if (m < 1) throw std::invalid_argument("block length must be >= 1");
    if (m > m_cap)
        throw std::invalid_argument("block length " + std::to_string(m) + " beyond cap " +
                                    std::to_string(m_cap));
    if (counts.size() != channel.inputs.size())
        throw std::invalid_argument("composition has " + std::to_string(counts.size()) +
                                    " entries for " + std::to_string(channel.inputs.size()) +
                                    " input symbols");
    int total = 0;
    for (int c : counts) {
        if (c < 0) throw std::invalid_argument("negative composition count");
        total += c;
    }
    if (total != m)
        throw std::invalid_argument("composition sums to " + std::to_string(total) +
                                    ", expected m = " + std::to_string(m));

    CompositionClassReport rep;
    rep.m = m;
    rep.counts = counts;
    std::vector<std::vector<int>> sequences;
    std::vector<int> seq;
    class_sequences_rec(counts, seq, m, sequences);
    rep.class_size = static_cast<long>(sequences.size());
    for (const auto& s : sequences) rep.sequences.push_back(sequence_label(channel, s));

    // Output fan of a sequence x: all y in Y^m with prod_i W(y_i|x_i) > 0.
    // Distinguishable sequences have disjoint fans; per-coordinate, fans are
    // products, so fans intersect iff they intersect coordinate-wise.
    int ny = static_cast<int>(channel.outputs.size());
    auto coordinate_fan = [&](int x) {
        std::uint64_t fan = 0;
        for (int y = 0; y < ny; ++y)
            if (channel.at(x, y) > 0) fan |= 1ull << y;
        return fan;
    };
    std::vector<std::uint64_t> fan(channel.inputs.size());
    for (std::size_t x = 0; x < channel.inputs.size(); ++x) fan[x] = coordinate_fan(static_cast<int>(x));
    if (ny > 64) throw std::invalid_argument("output alphabet beyond 64 symbols");

    int cls = static_cast<int>(sequences.size());
    BitMatrix adj(cls);
    for (int i = 0; i < cls; ++i)
        for (int j = i + 1; j < cls; ++j) {
            bool fans_intersect = true;
            for (int k = 0; k < m; ++k)
                if ((fan[sequences[i][k]] & fan[sequences[j][k]]) == 0) {
                    fans_intersect = false;
                    break;
                }
            if (!fans_intersect) {
                adj.set(i, j);
                adj.set(j, i);
            }
        }

    CliqueResult clique = max_clique(adj, budget);
    rep.value = clique.size;
    rep.status = clique.exact ? SolveReport::Status::Exact : SolveReport::Status::LowerBound;
    rep.nodes_explored = clique.nodes;
    rep.elapsed_ms = clique.elapsed_ms;
    for (int idx : clique.members) rep.witness.push_back(rep.sequences[idx]);
    std::sort(rep.witness.begin(), rep.witness.end());
    rep.rate = root_enclosure(rep.value, m);
    return rep;
}

std::vector<RemarkCounterexample> scan_disjoint_neighborhood_remark(int max_n) {
    std::vector<RemarkCounterexample> out;
    for (int n = 1; n <= max_n; ++n) {
        int slots = n * (n - 1) / 2;
        std::vector<Edge> all_pairs;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) all_pairs.emplace_back(u, v);
        for (std::uint64_t mask = 0; mask < (1ull << slots); ++mask) {
            GraphBuilder b(n);
            for (int e = 0; e < slots; ++e)
                if ((mask >> e) & 1u) b.add(all_pairs[e].first, all_pairs[e].second);
            LabeledGraph g = b.take();
            bool has_disjoint_pair = false;
            for (int u = 1; u <= n && !has_disjoint_pair; ++u)
                for (int v = u + 1; v <= n && !has_disjoint_pair; ++v)
                    if ((g.neighbor_mask(u) & g.neighbor_mask(v)) == 0) has_disjoint_pair = true;
            if (has_disjoint_pair) continue;  // claim is silent about these
            SolveReport r = nu(g, std::chrono::milliseconds(60000));
            if (r.value != 1) out.push_back({g, r.value});
        }
    }
    return out;
}

}  // namespace ddf
