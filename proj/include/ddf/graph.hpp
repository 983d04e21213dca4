#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ddf/arith.hpp"

namespace ddf {

// Simple labeled graphs on vertices 1..n, n <= kMaxVertices.  Edges live in a
// fixed-capacity bitset indexed over all vertex pairs so that union and
// intersection are a handful of word operations.
inline constexpr int kMaxVertices = 32;
inline constexpr int kMaxEdgeSlots = kMaxVertices * (kMaxVertices - 1) / 2;
inline constexpr int kEdgeWords = (kMaxEdgeSlots + 63) / 64;

using Edge = std::pair<int, int>;  // normalized u < v, 1-indexed
using EdgeBits = std::array<std::uint64_t, kEdgeWords>;

namespace detail {

struct EdgeTables {
    // Pairs (u,v), u<v, enumerated in lexicographic order over kMaxVertices.
    std::array<std::uint8_t, kMaxEdgeSlots> u{}, v{};
    std::array<std::array<std::int16_t, kMaxVertices + 1>, kMaxVertices + 1> index{};
    std::array<EdgeBits, kMaxVertices + 1> incident{};     // edge slots touching vertex
    std::array<std::uint64_t, kMaxEdgeSlots> vmask{};      // endpoint bits (vertex-1)

    constexpr EdgeTables() {
        int idx = 0;
        for (int a = 1; a <= kMaxVertices; ++a)
            for (int b = a + 1; b <= kMaxVertices; ++b) {
                u[idx] = static_cast<std::uint8_t>(a);
                v[idx] = static_cast<std::uint8_t>(b);
                index[a][b] = static_cast<std::int16_t>(idx);
                index[b][a] = static_cast<std::int16_t>(idx);
                incident[a][idx / 64] |= 1ull << (idx % 64);
                incident[b][idx / 64] |= 1ull << (idx % 64);
                vmask[idx] = (1ull << (a - 1)) | (1ull << (b - 1));
                ++idx;
            }
    }
};

inline constexpr EdgeTables kEdgeTables{};

}  // namespace detail

inline int edge_slot(int u, int v) { return detail::kEdgeTables.index[u][v]; }

class LabeledGraph {
public:
    LabeledGraph() = default;

    int n() const { return n_; }
    int edge_count() const { return m_; }
    const EdgeBits& bits() const { return bits_; }

    bool has_edge(int u, int v) const {
        if (u == v) return false;
        int s = edge_slot(u, v);
        return (bits_[s / 64] >> (s % 64)) & 1u;
    }

    // Edges in ascending (u,v) order.
    std::vector<Edge> edges() const;

    int degree(int v) const;
    // Bit (w-1) set iff w adjacent to v.
    std::uint64_t neighbor_mask(int v) const;
    // Bit (w-1) set iff w has degree >= 1.
    std::uint64_t covered_mask() const;

    LabeledGraph union_with(const LabeledGraph& other) const;
    LabeledGraph intersect(const LabeledGraph& other) const;
    bool contains(const LabeledGraph& sub) const;

    bool operator==(const LabeledGraph& o) const {
        return n_ == o.n_ && bits_ == o.bits_;
    }
    // (n, edge count, sorted edge list) lexicographic; the canonical stream order.
    bool operator<(const LabeledGraph& o) const;

    // Injective byte key: [n][m lo][m hi][u1][v1][u2][v2]...
    std::vector<std::uint8_t> canonical_key() const;
    std::string key_string() const;  // compact printable form, e.g. "n4:1-2,2-3"

    friend LabeledGraph make_graph(int n, std::span<const Edge> edge_list);
    friend class GraphBuilder;

private:
    int n_ = 0;
    int m_ = 0;
    EdgeBits bits_{};
};

// Validating constructor; throws std::invalid_argument naming the offending pair.
LabeledGraph make_graph(int n, std::span<const Edge> edge_list);
LabeledGraph make_graph(int n, std::initializer_list<Edge> edge_list);

// Unchecked incremental construction for generators that produce edges known
// to be valid and distinct.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    void add(int u, int v);
    void remove(int u, int v);
    LabeledGraph take() const;

private:
    LabeledGraph g_;
};

struct DegreeProfile {
    std::vector<int> degrees;  // index 0 = vertex 1
    int max_degree = 0;
    Rat average;
};

DegreeProfile degree_profile(const LabeledGraph& g);

struct DoublingPredicate {
    enum class Kind { MaxDegreeAtLeast, AverageDegreeAtLeast };
    Kind kind = Kind::MaxDegreeAtLeast;
    int min_max_degree = 4;
    Rat min_average = 4;

    static DoublingPredicate max_degree_at_least(int d);
    static DoublingPredicate average_degree_at_least(const Rat& alpha);

    bool satisfied_by(const DegreeProfile& p) const;
    std::string to_string() const;  // "maxdeg:4" / "avgdeg:7/2"
};

DoublingPredicate parse_predicate(const std::string& text);

bool doubling_compatible(const LabeledGraph& f, const LabeledGraph& g,
                         const DoublingPredicate& pred);

// Vertices of degree 0, ascending.
std::vector<int> isolated_vertices(const LabeledGraph& g);

enum class ComponentKind {
    IsolatedVertex,
    SingleEdge,
    TwoEdgePath,
    Path,   // path on >= 4 vertices
    Cycle,  // cycle of length >= 3
    Other,  // some vertex of degree >= 3
};

std::string component_kind_name(ComponentKind k);

struct Component {
    std::vector<int> vertices;  // ascending
    ComponentKind kind;
    int edge_count;
};

struct ComponentReport {
    std::vector<Component> components;
    std::vector<int> shape;  // component sizes, non-increasing
};

ComponentReport components(const LabeledGraph& g);

bool is_hamilton_cycle(const LabeledGraph& g);
bool is_two_regular(const LabeledGraph& g);

}  // namespace ddf
