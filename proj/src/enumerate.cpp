#include "ddf/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ddf {

namespace {

void check_vertex_range(int n, int lo) {
    if (n < lo)
        throw std::invalid_argument("vertex count must be >= " + std::to_string(lo) +
                                    ", got " + std::to_string(n));
    if (n > kMaxVertices)
        throw std::invalid_argument("vertex count " + std::to_string(n) + " exceeds capacity " +
                                    std::to_string(kMaxVertices));
}

// Walks sequences (1, a_2, ..., a_n); closing the cycle needs a_2 < a_n so
// each cycle appears once.
bool hamilton_cycle_rec(int n, std::vector<int>& seq, std::uint64_t used,
                        const GraphSink& sink) {
    int depth = static_cast<int>(seq.size());
    if (depth == n) {
        if (seq[1] > seq[n - 1]) return true;
        GraphBuilder b(n);
        for (int i = 0; i + 1 < n; ++i) b.add(seq[i], seq[i + 1]);
        b.add(seq[n - 1], seq[0]);
        return sink(b.take());
    }
    for (int v = 2; v <= n; ++v) {
        if (used & (1ull << v)) continue;
        seq.push_back(v);
        used |= 1ull << v;
        if (!hamilton_cycle_rec(n, seq, used, sink)) return false;
        used &= ~(1ull << v);
        seq.pop_back();
    }
    return true;
}

bool hamilton_path_rec(int n, std::vector<int>& seq, std::uint64_t used,
                       const GraphSink& sink) {
    int depth = static_cast<int>(seq.size());
    if (depth == n) {
        if (seq[0] > seq[n - 1]) return true;  // reversal representative
        GraphBuilder b(n);
        for (int i = 0; i + 1 < n; ++i) b.add(seq[i], seq[i + 1]);
        return sink(b.take());
    }
    for (int v = 1; v <= n; ++v) {
        if (used & (1ull << v)) continue;
        seq.push_back(v);
        used |= 1ull << v;
        if (!hamilton_path_rec(n, seq, used, sink)) return false;
        used &= ~(1ull << v);
        seq.pop_back();
    }
    return true;
}

// Matches the lowest unmatched vertex with each available partner.
bool matching_rec(int n, std::uint64_t used, GraphBuilder& b, const GraphSink& sink) {
    int a = 0;
    for (int v = 1; v <= n; ++v)
        if (!(used & (1ull << v))) {
            a = v;
            break;
        }
    if (a == 0) return sink(b.take());
    for (int v = a + 1; v <= n; ++v) {
        if (used & (1ull << v)) continue;
        b.add(a, v);
        if (!matching_rec(n, used | (1ull << a) | (1ull << v), b, sink)) return false;
        b.remove(a, v);
    }
    return true;
}

bool triangle_rec(int n, std::uint64_t used, GraphBuilder& b, const GraphSink& sink) {
    int a = 0;
    for (int v = 1; v <= n; ++v)
        if (!(used & (1ull << v))) {
            a = v;
            break;
        }
    if (a == 0) return sink(b.take());
    for (int x = a + 1; x <= n; ++x) {
        if (used & (1ull << x)) continue;
        for (int y = x + 1; y <= n; ++y) {
            if (used & (1ull << y)) continue;
            b.add(a, x);
            b.add(a, y);
            b.add(x, y);
            if (!triangle_rec(n, used | (1ull << a) | (1ull << x) | (1ull << y), b, sink))
                return false;
            b.remove(a, x);
            b.remove(a, y);
            b.remove(x, y);
        }
    }
    return true;
}

// Distinct cycles on the given block (ascending vertices): sequences anchored
// at block[0] with second < last.
bool block_cycles_rec(const std::vector<int>& block, std::vector<int>& seq,
                      std::uint64_t used_local, GraphBuilder& b,
                      const std::function<bool()>& done) {
    int k = static_cast<int>(block.size());
    int depth = static_cast<int>(seq.size());
    if (depth == k) {
        if (k > 2 && seq[1] > seq[k - 1]) return true;
        for (int i = 0; i + 1 < k; ++i) b.add(seq[i], seq[i + 1]);
        b.add(seq[k - 1], seq[0]);
        bool cont = done();
        for (int i = 0; i + 1 < k; ++i) b.remove(seq[i], seq[i + 1]);
        b.remove(seq[k - 1], seq[0]);
        return cont;
    }
    for (int i = 1; i < k; ++i) {
        if (used_local & (1ull << i)) continue;
        seq.push_back(block[i]);
        if (!block_cycles_rec(block, seq, used_local | (1ull << i), b, done)) return false;
        seq.pop_back();
    }
    return true;
}

struct TwoRegularGen {
    int n;
    const GraphSink& sink;
    GraphBuilder builder;
    std::uint64_t used = 0;

    TwoRegularGen(int n, const GraphSink& sink) : n(n), sink(sink), builder(n) {}

    // parts: remaining multiset, non-increasing.
    bool run(std::vector<int>& parts) {
        if (parts.empty()) return sink(builder.take());
        int anchor = 0;
        for (int v = 1; v <= n; ++v)
            if (!(used & (1ull << v))) {
                anchor = v;
                break;
            }
        int prev_size = -1;
        for (std::size_t pi = 0; pi < parts.size(); ++pi) {
            int s = parts[pi];
            if (s == prev_size) continue;  // one generation path per distinct size
            prev_size = s;
            std::vector<int> rest = parts;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pi));
            // choose s-1 companions for the anchor, ascending
            std::vector<int> avail;
            for (int v = anchor + 1; v <= n; ++v)
                if (!(used & (1ull << v))) avail.push_back(v);
            std::vector<int> pick;
            if (!choose_rec(avail, 0, s - 1, pick, anchor, rest)) return false;
        }
        return true;
    }

    bool choose_rec(const std::vector<int>& avail, std::size_t from, int need,
                    std::vector<int>& pick, int anchor, std::vector<int>& rest) {
        if (need == 0) {
            std::vector<int> block{anchor};
            block.insert(block.end(), pick.begin(), pick.end());
            std::uint64_t mark = 0;
            for (int v : block) mark |= 1ull << v;
            used |= mark;
            std::vector<int> seq{anchor};
            bool cont = block_cycles_rec(block, seq, 1ull /*anchor taken*/, builder,
                                         [&] { return run(rest); });
            used &= ~mark;
            return cont;
        }
        for (std::size_t i = from; i + static_cast<std::size_t>(need) <= avail.size(); ++i) {
            pick.push_back(avail[i]);
            if (!choose_rec(avail, i + 1, need - 1, pick, anchor, rest)) return false;
            pick.pop_back();
        }
        return true;
    }
};

// acc is the non-increasing prefix; iterating the next part ascending yields
// the partitions in ascending lexicographic order.
bool partitions_rec(int remaining, int min_part, int cap, std::vector<int>& acc,
                    const ShapeSink& sink) {
    if (remaining == 0) {
        PartitionShape shape;
        shape.parts = acc;
        shape.n = std::accumulate(acc.begin(), acc.end(), 0);
        return sink(shape);
    }
    for (int p = min_part; p <= std::min(remaining, cap); ++p) {
        acc.push_back(p);
        if (!partitions_rec(remaining - p, min_part, p, acc, sink)) return false;
        acc.pop_back();
    }
    return true;
}

}  // namespace

PartitionShape PartitionShape::of(std::vector<int> parts) {
    PartitionShape s;
    s.parts = std::move(parts);
    std::sort(s.parts.rbegin(), s.parts.rend());
    for (int p : s.parts)
        if (p < 1) throw std::invalid_argument("partition part must be positive");
    s.n = std::accumulate(s.parts.begin(), s.parts.end(), 0);
    return s;
}

void PartitionShape::require_two_regular(int want_n) const {
    for (int p : parts)
        if (p < 3)
            throw std::invalid_argument("shape part " + std::to_string(p) +
                                        " below 3 is not realizable by cycles");
    if (n != want_n)
        throw std::invalid_argument("shape sums to " + std::to_string(n) + ", expected " +
                                    std::to_string(want_n));
}

std::string PartitionShape::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        os << parts[i];
    }
    os << ")";
    return os.str();
}

void hamilton_cycles(int n, const GraphSink& sink) {
    check_vertex_range(n, 3);
    std::vector<int> seq{1};
    hamilton_cycle_rec(n, seq, 1ull << 1, sink);
}

void hamilton_paths(int n, const GraphSink& sink) {
    check_vertex_range(n, 2);
    std::vector<int> seq;
    hamilton_path_rec(n, seq, 0, sink);
}

void perfect_matchings(int n, const GraphSink& sink) {
    check_vertex_range(n, 2);
    if (n % 2 != 0)
        throw std::invalid_argument("perfect matching needs even n, got " + std::to_string(n));
    GraphBuilder b(n);
    matching_rec(n, 0, b, sink);
}

void near_matchings(int n, const GraphSink& sink) {
    check_vertex_range(n, 3);
    if (n % 2 == 0)
        throw std::invalid_argument("near-matching needs odd n, got " + std::to_string(n));
    // choose the 3 path vertices, then the center, then match the rest
    std::vector<int> tri(3);
    for (tri[0] = 1; tri[0] <= n - 2; ++tri[0])
        for (tri[1] = tri[0] + 1; tri[1] <= n - 1; ++tri[1])
            for (tri[2] = tri[1] + 1; tri[2] <= n; ++tri[2])
                for (int center : tri) {
                    GraphBuilder b(n);
                    for (int v : tri)
                        if (v != center) b.add(center, v);
                    std::uint64_t used = 0;
                    for (int v : tri) used |= 1ull << v;
                    if (!matching_rec(n, used, b, sink)) return;
                }
}

void triangle_factors(int n, const GraphSink& sink) {
    check_vertex_range(n, 3);
    if (n % 3 != 0)
        throw std::invalid_argument("triangle factor needs 3 | n, got " + std::to_string(n));
    GraphBuilder b(n);
    triangle_rec(n, 0, b, sink);
}

void two_regular_graphs(int n, const std::optional<PartitionShape>& shape,
                        const GraphSink& sink) {
    check_vertex_range(n, 3);
    if (shape) {
        shape->require_two_regular(n);
        TwoRegularGen gen(n, sink);
        std::vector<int> parts = shape->parts;
        gen.run(parts);
        return;
    }
    bool keep_going = true;
    partitions(n, 3, [&](const PartitionShape& p) {
        TwoRegularGen gen(n, [&](const LabeledGraph& g) {
            keep_going = sink(g);
            return keep_going;
        });
        std::vector<int> parts = p.parts;
        gen.run(parts);
        return keep_going;
    });
}

void partitions(int n, int min_part, const ShapeSink& sink) {
    if (n < 1) throw std::invalid_argument("partitions need n >= 1");
    if (min_part < 1) throw std::invalid_argument("min_part must be >= 1");
    std::vector<int> acc;
    partitions_rec(n, min_part, n, acc, sink);
}

Int partition_enumeration_count(int n, int min_part) {
    Int count = 0;
    partitions(n, min_part, [&](const PartitionShape&) {
        ++count;
        return true;
    });
    return count;
}

LabeledGraph pattern_for_shape(const PartitionShape& shape) {
    shape.require_two_regular(shape.n);
    int n = shape.n;
    check_vertex_range(n, 3);
    int odd = 0;
    for (int p : shape.parts) odd += p % 2;
    GraphBuilder b(n);
    int next = 1;
    for (int i = 0; i < odd; ++i) {
        b.add(next, next + 1);
        b.add(next + 1, next + 2);
        next += 3;
    }
    for (; next + 1 <= n; next += 2) b.add(next, next + 1);
    return b.take();
}

LabeledGraph canonical_perfect_matching(int n) {
    check_vertex_range(n, 2);
    if (n % 2 != 0) throw std::invalid_argument("even n required");
    GraphBuilder b(n);
    for (int v = 1; v + 1 <= n; v += 2) b.add(v, v + 1);
    return b.take();
}

LabeledGraph canonical_near_matching(int n) {
    check_vertex_range(n, 3);
    if (n % 2 == 0) throw std::invalid_argument("odd n required");
    GraphBuilder b(n);
    b.add(1, 2);
    b.add(2, 3);
    for (int v = 4; v + 1 <= n; v += 2) b.add(v, v + 1);
    return b.take();
}

LabeledGraph canonical_hamilton_cycle(int n) {
    check_vertex_range(n, 3);
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v) b.add(v, v + 1);
    b.add(n, 1);
    return b.take();
}

std::vector<LabeledGraph> labeled_copies(const LabeledGraph& g) {
    int n = g.n();
    if (n > 10)
        throw std::invalid_argument("copy universe for n = " + std::to_string(n) +
                                    " is beyond exhaustive reach (cap 10)");
    auto edge_list = g.edges();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::set<LabeledGraph> seen;
    do {
        GraphBuilder b(n);
        for (auto [u, v] : edge_list) b.add(perm[u - 1], perm[v - 1]);
        seen.insert(b.take());
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {seen.begin(), seen.end()};
}

Universe Universe::hamilton_cycles(int n) { return {Kind::HamiltonCycles, n, {}, {}}; }
Universe Universe::hamilton_paths(int n) { return {Kind::HamiltonPaths, n, {}, {}}; }
Universe Universe::two_regular(int n, std::optional<PartitionShape> shape) {
    return {Kind::TwoRegular, n, std::move(shape), {}};
}
Universe Universe::perfect_matchings(int n) { return {Kind::PerfectMatchings, n, {}, {}}; }
Universe Universe::near_matchings(int n) { return {Kind::NearMatchings, n, {}, {}}; }
Universe Universe::triangle_factors(int n) { return {Kind::TriangleFactors, n, {}, {}}; }
Universe Universe::copies_of(LabeledGraph g) {
    Universe u{Kind::CopiesOf, g.n(), {}, {}};
    u.base = std::move(g);
    return u;
}

std::string Universe::tag() const {
    switch (kind) {
        case Kind::HamiltonCycles: return "hamilton-cycles";
        case Kind::HamiltonPaths: return "hamilton-paths";
        case Kind::TwoRegular:
            return shape ? "two-regular-shape" + shape->to_string() : "two-regular";
        case Kind::PerfectMatchings: return "perfect-matchings";
        case Kind::NearMatchings: return "near-matchings";
        case Kind::TriangleFactors: return "triangle-factors";
        case Kind::CopiesOf: return "copies-of(" + base->key_string() + ")";
    }
    return "?";
}

void Universe::generate(const GraphSink& sink) const {
    switch (kind) {
        case Kind::HamiltonCycles: ddf::hamilton_cycles(n, sink); return;
        case Kind::HamiltonPaths: ddf::hamilton_paths(n, sink); return;
        case Kind::TwoRegular: two_regular_graphs(n, shape, sink); return;
        case Kind::PerfectMatchings: ddf::perfect_matchings(n, sink); return;
        case Kind::NearMatchings: ddf::near_matchings(n, sink); return;
        case Kind::TriangleFactors: ddf::triangle_factors(n, sink); return;
        case Kind::CopiesOf:
            for (const auto& g : labeled_copies(*base))
                if (!sink(g)) return;
            return;
    }
}

std::vector<LabeledGraph> Universe::collect() const {
    std::vector<LabeledGraph> out;
    generate([&](const LabeledGraph& g) {
        out.push_back(g);
        return true;
    });
    std::sort(out.begin(), out.end());
    auto dup = std::adjacent_find(out.begin(), out.end());
    if (dup != out.end())
        throw std::logic_error("duplicate graph in " + tag() + " stream: " + dup->key_string());
    return out;
}

Universe parse_universe(const std::string& tag, int n,
                        const std::optional<PartitionShape>& shape) {
    if (tag == "hamilton-cycles") return Universe::hamilton_cycles(n);
    if (tag == "hamilton-paths") return Universe::hamilton_paths(n);
    if (tag == "two-regular") return Universe::two_regular(n, shape);
    if (tag == "perfect-matchings") return Universe::perfect_matchings(n);
    if (tag == "near-matchings") return Universe::near_matchings(n);
    if (tag == "triangle-factors") return Universe::triangle_factors(n);
    throw std::invalid_argument("unknown universe \"" + tag + "\"");
}

void members_containing(const LabeledGraph& pattern, const Universe& universe,
                        const GraphSink& sink) {
    if (pattern.n() != universe.n)
        throw std::invalid_argument("pattern n=" + std::to_string(pattern.n()) +
                                    " does not match universe n=" + std::to_string(universe.n));
    universe.generate([&](const LabeledGraph& g) {
        if (g.contains(pattern)) return sink(g);
        return true;
    });
}

std::vector<LabeledGraph> collect_members_containing(const LabeledGraph& pattern,
                                                     const Universe& universe) {
    std::vector<LabeledGraph> out;
    members_containing(pattern, universe, [&](const LabeledGraph& g) {
        out.push_back(g);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

void minimal_coverings(const LabeledGraph& host, const CoveringSink& sink) {
    if (!is_hamilton_cycle(host))
        throw std::invalid_argument("minimal coverings are defined on a Hamilton cycle");
    int n = host.n();
    if (n > 20)
        throw std::invalid_argument("covering scan capped at n <= 20, got " + std::to_string(n));
    auto edge_list = host.edges();
    std::vector<std::uint64_t> vmask(edge_list.size());
    for (std::size_t i = 0; i < edge_list.size(); ++i)
        vmask[i] = (1ull << (edge_list[i].first - 1)) | (1ull << (edge_list[i].second - 1));
    std::uint64_t all = (n == 64) ? ~0ull : ((1ull << n) - 1);

    for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
        // coverage and per-vertex multiplicity
        std::uint64_t covered = 0;
        std::array<std::uint8_t, kMaxVertices> times{};
        for (int i = 0; i < n; ++i)
            if (subset & (1ull << i)) {
                covered |= vmask[i];
                times[edge_list[i].first - 1]++;
                times[edge_list[i].second - 1]++;
            }
        if (covered != all) continue;
        bool minimal = true;
        for (int i = 0; i < n && minimal; ++i)
            if (subset & (1ull << i))
                if (times[edge_list[i].first - 1] > 1 && times[edge_list[i].second - 1] > 1)
                    minimal = false;  // edge removable, still a cover
        if (!minimal) continue;

        GraphBuilder b(n);
        for (int i = 0; i < n; ++i)
            if (subset & (1ull << i)) b.add(edge_list[i].first, edge_list[i].second);
        MinimalCovering cov;
        cov.host = host;
        cov.cover = b.take();
        auto rep = components(cov.cover);
        cov.component_count = 0;
        cov.two_edge_paths = 0;
        bool shape_ok = true;
        for (const auto& c : rep.components) {
            if (c.kind == ComponentKind::SingleEdge) {
                ++cov.component_count;
            } else if (c.kind == ComponentKind::TwoEdgePath) {
                ++cov.component_count;
                ++cov.two_edge_paths;
            } else {
                shape_ok = false;
            }
        }
        if (!shape_ok)
            throw std::logic_error("minimal covering with a component that is neither a single "
                                   "edge nor a 2-edge path");
        if (!sink(cov)) return;
    }
}

std::vector<MinimalCovering> collect_minimal_coverings(const LabeledGraph& host) {
    std::vector<MinimalCovering> out;
    minimal_coverings(host, [&](const MinimalCovering& c) {
        out.push_back(c);
        return true;
    });
    std::sort(out.begin(), out.end(),
              [](const MinimalCovering& a, const MinimalCovering& b) { return a.cover < b.cover; });
    return out;
}

}  // namespace ddf
