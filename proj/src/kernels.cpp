#include "ddf/kernels.hpp"

#include <bit>
#include <stdexcept>

namespace ddf {

namespace {

void require_uniform_n(std::span<const LabeledGraph> gs) {
    for (const auto& g : gs)
        if (g.n() != gs.front().n())
            throw std::invalid_argument("candidates do not share a vertex count");
}

// Fast pair check equivalent to pred(degree_profile(F ∪ G)).
struct PairCheck {
    DoublingPredicate pred;
    int n = 0;
    std::uint64_t full = 0;
    bool all_two_regular = false;
    int min_union_edges = 0;  // average variant: m >= ceil(alpha*n/2)

    PairCheck(std::span<const LabeledGraph> gs, const DoublingPredicate& pred)
        : pred(pred), n(gs.empty() ? 0 : gs.front().n()) {
        full = n == 64 ? ~0ull : ((1ull << n) - 1);
        if (pred.kind == DoublingPredicate::Kind::AverageDegreeAtLeast) {
            // 2m/n >= a/b  <=>  m >= ceil(a*n / (2b))
            Int a = boost::multiprecision::numerator(pred.min_average);
            Int b = boost::multiprecision::denominator(pred.min_average);
            Int need = (a * n + 2 * b - 1) / (2 * b);
            min_union_edges = static_cast<int>(need);
        }
        all_two_regular = true;
        for (const auto& g : gs)
            if (!is_two_regular(g)) {
                all_two_regular = false;
                break;
            }
    }

    bool operator()(const LabeledGraph& f, const LabeledGraph& g) const {
        if (pred.kind == DoublingPredicate::Kind::AverageDegreeAtLeast) {
            int m = 0;
            for (int w = 0; w < kEdgeWords; ++w)
                m += std::popcount(f.bits()[w] | g.bits()[w]);
            return m >= min_union_edges;
        }
        if (all_two_regular && pred.min_max_degree == 4) {
            // union has a degree-4 vertex iff the intersection leaves a vertex
            // uncovered (degrees add up to 4 exactly where edge sets are disjoint)
            std::uint64_t covered = 0;
            for (int w = 0; w < kEdgeWords; ++w) {
                std::uint64_t word = f.bits()[w] & g.bits()[w];
                while (word) {
                    int bit = std::countr_zero(word);
                    word &= word - 1;
                    covered |= detail::kEdgeTables.vmask[w * 64 + bit];
                }
            }
            return covered != full;
        }
        for (int v = 1; v <= n; ++v) {
            const EdgeBits& inc = detail::kEdgeTables.incident[v];
            int d = 0;
            for (int w = 0; w < kEdgeWords; ++w)
                d += std::popcount((f.bits()[w] | g.bits()[w]) & inc[w]);
            if (d >= pred.min_max_degree) return true;
        }
        return false;
    }
};

std::uint64_t vertex_neighbor_words(const LabeledGraph& g, std::vector<std::uint64_t>& out) {
    out.resize(g.n());
    for (int v = 1; v <= g.n(); ++v) out[v - 1] = g.neighbor_mask(v);
    return 0;
}

bool graphs_distinguishable(std::span<const std::uint64_t> nf,
                            std::span<const std::uint64_t> ng) {
    for (std::size_t v = 0; v < nf.size(); ++v)
        if ((nf[v] & ng[v]) == 0) return true;
    return false;
}

}  // namespace

std::size_t BitMatrix::edge_count() const {
    std::size_t total = 0;
    for (auto w : bits) total += std::popcount(w);
    return total / 2;
}

BitMatrix compatibility_matrix_serial(std::span<const LabeledGraph> candidates,
                                      const DoublingPredicate& pred) {
    require_uniform_n(candidates);
    int n = static_cast<int>(candidates.size());
    BitMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (doubling_compatible(candidates[i], candidates[j], pred)) {
                m.set(i, j);
                m.set(j, i);
            }
    return m;
}

BitMatrix compatibility_matrix_parallel(std::span<const LabeledGraph> candidates,
                                        const DoublingPredicate& pred) {
    require_uniform_n(candidates);
    int n = static_cast<int>(candidates.size());
    BitMatrix m(n);
    PairCheck check(candidates, pred);
#pragma omp parallel for schedule(dynamic, 16)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && check(candidates[i], candidates[j])) m.set(i, j);
    return m;
}

BitMatrix distinguishability_matrix_serial(std::span<const LabeledGraph> copies) {
    require_uniform_n(copies);
    int n = static_cast<int>(copies.size());
    BitMatrix m(n);
    std::vector<std::uint64_t> nf, ng;
    for (int i = 0; i < n; ++i) {
        vertex_neighbor_words(copies[i], nf);
        for (int j = i + 1; j < n; ++j) {
            vertex_neighbor_words(copies[j], ng);
            if (copies[i] == copies[j]) continue;
            if (graphs_distinguishable(nf, ng)) {
                m.set(i, j);
                m.set(j, i);
            }
        }
    }
    return m;
}

BitMatrix distinguishability_matrix_parallel(std::span<const LabeledGraph> copies) {
    require_uniform_n(copies);
    int n = static_cast<int>(copies.size());
    BitMatrix m(n);
    // neighborhood masks once per graph, then pure pair scans
    std::vector<std::vector<std::uint64_t>> nb(n);
    for (int i = 0; i < n; ++i) vertex_neighbor_words(copies[i], nb[i]);
#pragma omp parallel for schedule(dynamic, 16)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && !(copies[i] == copies[j]) && graphs_distinguishable(nb[i], nb[j]))
                m.set(i, j);
    return m;
}

namespace {

bool digraphs_distinguishable(const Digraph& a, const Digraph& b) {
    for (int v = 1; v <= a.n(); ++v) {
        auto ra = a.out_row(v), rb = b.out_row(v);
        bool disjoint = true;
        for (std::size_t w = 0; w < ra.size(); ++w)
            if (ra[w] & rb[w]) {
                disjoint = false;
                break;
            }
        if (disjoint) return true;
    }
    return false;
}

}  // namespace

BitMatrix distinguishability_matrix_serial(std::span<const Digraph> copies) {
    int n = static_cast<int>(copies.size());
    BitMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!(copies[i] == copies[j]) && digraphs_distinguishable(copies[i], copies[j])) {
                m.set(i, j);
                m.set(j, i);
            }
    return m;
}

BitMatrix distinguishability_matrix_parallel(std::span<const Digraph> copies) {
    int n = static_cast<int>(copies.size());
    BitMatrix m(n);
#pragma omp parallel for schedule(dynamic, 16)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && !(copies[i] == copies[j]) &&
                digraphs_distinguishable(copies[i], copies[j]))
                m.set(i, j);
    return m;
}

ContainmentCounts containment_counts_serial(std::span<const LabeledGraph> patterns,
                                            std::span<const LabeledGraph> members) {
    ContainmentCounts c;
    c.per_pattern.assign(patterns.size(), 0);
    c.per_member.assign(members.size(), 0);
    for (std::size_t p = 0; p < patterns.size(); ++p)
        for (std::size_t g = 0; g < members.size(); ++g)
            if (members[g].contains(patterns[p])) {
                ++c.per_pattern[p];
                ++c.per_member[g];
            }
    return c;
}

ContainmentCounts containment_counts_parallel(std::span<const LabeledGraph> patterns,
                                              std::span<const LabeledGraph> members) {
    ContainmentCounts c;
    c.per_pattern.assign(patterns.size(), 0);
    c.per_member.assign(members.size(), 0);
    const int np = static_cast<int>(patterns.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (int p = 0; p < np; ++p) {
        long count = 0;
        for (std::size_t g = 0; g < members.size(); ++g)
            if (members[g].contains(patterns[p])) ++count;
        c.per_pattern[p] = count;
    }
    const int nm = static_cast<int>(members.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (int g = 0; g < nm; ++g) {
        long count = 0;
        for (std::size_t p = 0; p < patterns.size(); ++p)
            if (members[g].contains(patterns[p])) ++count;
        c.per_member[g] = count;
    }
    return c;
}

long covering_incompatible_count(const LabeledGraph& h, std::span<const LabeledGraph> cycles) {
    for (const auto& c : cycles)
        if (c.n() != h.n())
            throw std::invalid_argument("universe member does not share the vertex count of h");
    std::uint64_t full = h.n() == 64 ? ~0ull : ((1ull << h.n()) - 1);
    long count = 0;
    const int n = static_cast<int>(cycles.size());
#pragma omp parallel for reduction(+ : count) schedule(static)
    for (int i = 0; i < n; ++i)
        if (h.intersect(cycles[i]).covered_mask() == full) ++count;
    return count;
}

}  // namespace ddf
