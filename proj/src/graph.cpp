#include "ddf/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace ddf {

namespace {

std::string pair_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

std::vector<Edge> LabeledGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int w = 0; w < kEdgeWords; ++w) {
        std::uint64_t word = bits_[w];
        while (word) {
            int bit = std::countr_zero(word);
            word &= word - 1;
            int slot = w * 64 + bit;
            out.emplace_back(detail::kEdgeTables.u[slot], detail::kEdgeTables.v[slot]);
        }
    }
    return out;
}

int LabeledGraph::degree(int v) const {
    const EdgeBits& inc = detail::kEdgeTables.incident[v];
    int d = 0;
    for (int w = 0; w < kEdgeWords; ++w) d += std::popcount(bits_[w] & inc[w]);
    return d;
}

std::uint64_t LabeledGraph::neighbor_mask(int v) const {
    const EdgeBits& inc = detail::kEdgeTables.incident[v];
    std::uint64_t mask = 0;
    for (int w = 0; w < kEdgeWords; ++w) {
        std::uint64_t word = bits_[w] & inc[w];
        while (word) {
            int bit = std::countr_zero(word);
            word &= word - 1;
            mask |= detail::kEdgeTables.vmask[w * 64 + bit];
        }
    }
    mask &= ~(1ull << (v - 1));
    return mask;
}

std::uint64_t LabeledGraph::covered_mask() const {
    std::uint64_t mask = 0;
    for (int w = 0; w < kEdgeWords; ++w) {
        std::uint64_t word = bits_[w];
        while (word) {
            int bit = std::countr_zero(word);
            word &= word - 1;
            mask |= detail::kEdgeTables.vmask[w * 64 + bit];
        }
    }
    return mask;
}

LabeledGraph LabeledGraph::union_with(const LabeledGraph& other) const {
    if (n_ != other.n_)
        throw std::invalid_argument("vertex count mismatch: " + std::to_string(n_) +
                                    " vs " + std::to_string(other.n_));
    LabeledGraph out;
    out.n_ = n_;
    int m = 0;
    for (int w = 0; w < kEdgeWords; ++w) {
        out.bits_[w] = bits_[w] | other.bits_[w];
        m += std::popcount(out.bits_[w]);
    }
    out.m_ = m;
    return out;
}

LabeledGraph LabeledGraph::intersect(const LabeledGraph& other) const {
    if (n_ != other.n_)
        throw std::invalid_argument("vertex count mismatch: " + std::to_string(n_) +
                                    " vs " + std::to_string(other.n_));
    LabeledGraph out;
    out.n_ = n_;
    int m = 0;
    for (int w = 0; w < kEdgeWords; ++w) {
        out.bits_[w] = bits_[w] & other.bits_[w];
        m += std::popcount(out.bits_[w]);
    }
    out.m_ = m;
    return out;
}

bool LabeledGraph::contains(const LabeledGraph& sub) const {
    for (int w = 0; w < kEdgeWords; ++w)
        if (sub.bits_[w] & ~bits_[w]) return false;
    return true;
}

bool LabeledGraph::operator<(const LabeledGraph& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    if (m_ != o.m_) return m_ < o.m_;
    // Equal edge counts: lexicographic on sorted edge lists = the graph whose
    // lowest differing edge slot is present compares smaller.
    for (int w = 0; w < kEdgeWords; ++w) {
        std::uint64_t diff = bits_[w] ^ o.bits_[w];
        if (diff) {
            int bit = std::countr_zero(diff);
            return (bits_[w] >> bit) & 1u;
        }
    }
    return false;
}

std::vector<std::uint8_t> LabeledGraph::canonical_key() const {
    std::vector<std::uint8_t> key;
    key.reserve(3 + 2 * m_);
    key.push_back(static_cast<std::uint8_t>(n_));
    key.push_back(static_cast<std::uint8_t>(m_ & 0xff));
    key.push_back(static_cast<std::uint8_t>(m_ >> 8));
    for (auto [u, v] : edges()) {
        key.push_back(static_cast<std::uint8_t>(u));
        key.push_back(static_cast<std::uint8_t>(v));
    }
    return key;
}

std::string LabeledGraph::key_string() const {
    std::ostringstream os;
    os << "n" << n_ << ":";
    bool first = true;
    for (auto [u, v] : edges()) {
        if (!first) os << ",";
        first = false;
        os << u << "-" << v;
    }
    return os.str();
}

LabeledGraph make_graph(int n, std::span<const Edge> edge_list) {
    if (n < 1) throw std::invalid_argument("vertex count must be positive, got " + std::to_string(n));
    if (n > kMaxVertices)
        throw std::invalid_argument("vertex count " + std::to_string(n) + " exceeds capacity " +
                                    std::to_string(kMaxVertices));
    LabeledGraph g;
    g.n_ = n;
    for (auto [u, v] : edge_list) {
        if (u == v) throw std::invalid_argument("loop edge " + pair_str(u, v));
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("endpoint outside 1.." + std::to_string(n) + ": " +
                                        pair_str(u, v));
        if (u > v) std::swap(u, v);
        int slot = edge_slot(u, v);
        std::uint64_t bit = 1ull << (slot % 64);
        if (g.bits_[slot / 64] & bit)
            throw std::invalid_argument("duplicate edge " + pair_str(u, v));
        g.bits_[slot / 64] |= bit;
        ++g.m_;
    }
    return g;
}

LabeledGraph make_graph(int n, std::initializer_list<Edge> edge_list) {
    return make_graph(n, std::span<const Edge>(edge_list.begin(), edge_list.size()));
}

GraphBuilder::GraphBuilder(int n) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
    g_.n_ = n;
}

void GraphBuilder::add(int u, int v) {
    if (u > v) std::swap(u, v);
    int slot = edge_slot(u, v);
    g_.bits_[slot / 64] |= 1ull << (slot % 64);
    ++g_.m_;
}

void GraphBuilder::remove(int u, int v) {
    if (u > v) std::swap(u, v);
    int slot = edge_slot(u, v);
    g_.bits_[slot / 64] &= ~(1ull << (slot % 64));
    --g_.m_;
}

LabeledGraph GraphBuilder::take() const { return g_; }

DegreeProfile degree_profile(const LabeledGraph& g) {
    DegreeProfile p;
    p.degrees.resize(g.n());
    for (int v = 1; v <= g.n(); ++v) {
        p.degrees[v - 1] = g.degree(v);
        p.max_degree = std::max(p.max_degree, p.degrees[v - 1]);
    }
    p.average = Rat(2 * g.edge_count(), g.n());
    return p;
}

DoublingPredicate DoublingPredicate::max_degree_at_least(int d) {
    if (d < 0) throw std::invalid_argument("degree threshold must be >= 0");
    DoublingPredicate p;
    p.kind = Kind::MaxDegreeAtLeast;
    p.min_max_degree = d;
    return p;
}

DoublingPredicate DoublingPredicate::average_degree_at_least(const Rat& alpha) {
    if (alpha < 0) throw std::invalid_argument("average threshold must be >= 0");
    DoublingPredicate p;
    p.kind = Kind::AverageDegreeAtLeast;
    p.min_average = alpha;
    return p;
}

bool DoublingPredicate::satisfied_by(const DegreeProfile& p) const {
    if (kind == Kind::MaxDegreeAtLeast) return p.max_degree >= min_max_degree;
    return p.average >= min_average;
}

std::string DoublingPredicate::to_string() const {
    if (kind == Kind::MaxDegreeAtLeast) return "maxdeg:" + std::to_string(min_max_degree);
    return "avgdeg:" + rat_str(min_average);
}

DoublingPredicate parse_predicate(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("predicate must look like maxdeg:4 or avgdeg:4, got \"" + text + "\"");
    std::string head = text.substr(0, colon), tail = text.substr(colon + 1);
    if (head == "maxdeg") return DoublingPredicate::max_degree_at_least(std::stoi(tail));
    if (head == "avgdeg") return DoublingPredicate::average_degree_at_least(parse_exact_number(tail));
    throw std::invalid_argument("unknown predicate kind \"" + head + "\"");
}

bool doubling_compatible(const LabeledGraph& f, const LabeledGraph& g,
                         const DoublingPredicate& pred) {
    return pred.satisfied_by(degree_profile(f.union_with(g)));
}

std::vector<int> isolated_vertices(const LabeledGraph& g) {
    std::uint64_t covered = g.covered_mask();
    std::vector<int> out;
    for (int v = 1; v <= g.n(); ++v)
        if (!((covered >> (v - 1)) & 1u)) out.push_back(v);
    return out;
}

std::string component_kind_name(ComponentKind k) {
    switch (k) {
        case ComponentKind::IsolatedVertex: return "isolated-vertex";
        case ComponentKind::SingleEdge: return "single-edge";
        case ComponentKind::TwoEdgePath: return "two-edge-path";
        case ComponentKind::Path: return "path";
        case ComponentKind::Cycle: return "cycle";
        case ComponentKind::Other: return "other";
    }
    return "?";
}

ComponentReport components(const LabeledGraph& g) {
    ComponentReport report;
    std::vector<bool> seen(g.n() + 1, false);
    for (int start = 1; start <= g.n(); ++start) {
        if (seen[start]) continue;
        Component comp;
        comp.edge_count = 0;
        std::vector<int> stack{start};
        seen[start] = true;
        int max_deg = 0, deg1 = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.vertices.push_back(v);
            int d = g.degree(v);
            max_deg = std::max(max_deg, d);
            if (d == 1) ++deg1;
            comp.edge_count += d;  // halved below
            std::uint64_t nb = g.neighbor_mask(v);
            while (nb) {
                int w = std::countr_zero(nb) + 1;
                nb &= nb - 1;
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        comp.edge_count /= 2;
        std::sort(comp.vertices.begin(), comp.vertices.end());
        int size = static_cast<int>(comp.vertices.size());
        if (size == 1)
            comp.kind = ComponentKind::IsolatedVertex;
        else if (max_deg >= 3)
            comp.kind = ComponentKind::Other;
        else if (deg1 == 0)
            comp.kind = ComponentKind::Cycle;
        else if (size == 2)
            comp.kind = ComponentKind::SingleEdge;
        else if (size == 3)
            comp.kind = ComponentKind::TwoEdgePath;
        else
            comp.kind = ComponentKind::Path;
        report.components.push_back(std::move(comp));
    }
    for (const auto& c : report.components)
        report.shape.push_back(static_cast<int>(c.vertices.size()));
    std::sort(report.shape.rbegin(), report.shape.rend());
    return report;
}

bool is_hamilton_cycle(const LabeledGraph& g) {
    if (g.n() < 3 || g.edge_count() != g.n()) return false;
    auto rep = components(g);
    return rep.components.size() == 1 && rep.components[0].kind == ComponentKind::Cycle;
}

bool is_two_regular(const LabeledGraph& g) {
    for (int v = 1; v <= g.n(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

}  // namespace ddf
