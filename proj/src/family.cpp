#include "ddf/family.hpp"

#include <algorithm>
#include <stdexcept>

namespace ddf {

VerifyResult verify_family(const Family& fam) {
    VerifyResult r;
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
        if (fam.members[i].n() != fam.n) {
            r.reason = "member " + std::to_string(i) + " has vertex count " +
                       std::to_string(fam.members[i].n()) + ", family has " + std::to_string(fam.n);
            return r;
        }
    }
    for (std::size_t i = 0; i < fam.members.size(); ++i)
        for (std::size_t j = i + 1; j < fam.members.size(); ++j) {
            if (fam.members[i] == fam.members[j]) {
                r.reason = "duplicate members";
                r.failing_pair = {static_cast<int>(i), static_cast<int>(j)};
                return r;
            }
            if (!doubling_compatible(fam.members[i], fam.members[j], fam.predicate)) {
                r.reason = "pair fails " + fam.predicate.to_string();
                r.failing_pair = {static_cast<int>(i), static_cast<int>(j)};
                return r;
            }
        }
    r.ok = true;
    return r;
}

CompatibilityGraph compatibility_graph(std::span<const LabeledGraph> candidates,
                                       const DoublingPredicate& pred) {
    for (std::size_t i = 0; i + 1 < candidates.size(); ++i)
        for (std::size_t j = i + 1; j < candidates.size(); ++j)
            if (candidates[i] == candidates[j])
                throw std::invalid_argument("duplicate candidate " + candidates[i].key_string());
    CompatibilityGraph g;
    g.order = static_cast<int>(candidates.size());
    g.adjacency = compatibility_matrix_parallel(candidates, pred);
    g.candidate_keys.reserve(candidates.size());
    for (const auto& c : candidates) g.candidate_keys.push_back(c.key_string());
    return g;
}

Family greedy_family(std::span<const LabeledGraph> candidates, const DoublingPredicate& pred,
                     const std::string& universe_tag) {
    Family fam;
    fam.predicate = pred;
    fam.universe_tag = universe_tag;
    fam.n = candidates.empty() ? 0 : candidates.front().n();
    std::vector<bool> alive(candidates.size(), true);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (!alive[i]) continue;
        fam.members.push_back(candidates[i]);
        alive[i] = false;
        for (std::size_t j = i + 1; j < candidates.size(); ++j)
            if (alive[j] && !doubling_compatible(candidates[i], candidates[j], pred))
                alive[j] = false;
    }
    return fam;
}

bool is_inclusion_maximal(const Family& fam, std::span<const LabeledGraph> candidates) {
    for (const auto& c : candidates) {
        bool is_member = false;
        for (const auto& m : fam.members)
            if (m == c) {
                is_member = true;
                break;
            }
        if (is_member) continue;
        bool compatible_with_all = true;
        for (const auto& m : fam.members)
            if (!doubling_compatible(c, m, fam.predicate)) {
                compatible_with_all = false;
                break;
            }
        if (compatible_with_all) return false;
    }
    return true;
}

SolveReport max_family_exact(std::span<const LabeledGraph> candidates,
                             const DoublingPredicate& pred,
                             std::chrono::milliseconds budget,
                             const std::string& universe_tag) {
    if (budget.count() <= 0) throw std::invalid_argument("budget must be positive");
    SolveReport report;
    report.witness.predicate = pred;
    report.witness.universe_tag = universe_tag;
    report.witness.n = candidates.empty() ? 0 : candidates.front().n();
    if (candidates.empty()) return report;

    CompatibilityGraph cg = compatibility_graph(candidates, pred);
    CliqueResult clique = max_clique(cg.adjacency, budget);
    report.value = clique.size;
    report.status = clique.exact ? SolveReport::Status::Exact : SolveReport::Status::LowerBound;
    report.nodes_explored = clique.nodes;
    report.elapsed_ms = clique.elapsed_ms;
    for (int idx : clique.members) report.witness.members.push_back(candidates[idx]);
    std::sort(report.witness.members.begin(), report.witness.members.end());
    return report;
}

Family triangle_family(int n) {
    if (n < 3) throw std::invalid_argument("n >= 3 required, got " + std::to_string(n));
    Family fam;
    fam.n = n;
    fam.predicate = DoublingPredicate::max_degree_at_least(4);
    fam.universe_tag = "two-regular";
    if (n % 3 == 0) {
        triangle_factors(n, [&](const LabeledGraph& g) {
            fam.members.push_back(g);
            return true;
        });
    } else {
        int q = n / 3 - 1;  // n = 3q + r with r in {4,5}
        int base = 3 * q;
        std::vector<Edge> gadget;
        for (int v = base + 1; v < n; ++v) gadget.emplace_back(v, v + 1);
        gadget.emplace_back(base + 1, n);
        if (q == 0) {
            GraphBuilder b(n);
            for (auto [u, v] : gadget) b.add(u, v);
            fam.members.push_back(b.take());
        } else {
            triangle_factors(base, [&](const LabeledGraph& factor) {
                GraphBuilder b(n);
                for (auto [u, v] : factor.edges()) b.add(u, v);
                for (auto [u, v] : gadget) b.add(u, v);
                fam.members.push_back(b.take());
                return true;
            });
        }
    }
    std::sort(fam.members.begin(), fam.members.end());
    return fam;
}

CoverBoundReport cover_upper_bound(int n, PatternKind kind,
                                   const std::optional<PartitionShape>& shape) {
    CoverBoundReport rep;
    rep.kind = kind;
    rep.n = n;
    rep.shape = shape;

    Universe universe = Universe::hamilton_cycles(n);
    std::vector<LabeledGraph> patterns;
    switch (kind) {
        case PatternKind::Matching:
            if (n % 2 != 0) throw std::invalid_argument("matching pattern needs even n");
            universe = Universe::hamilton_cycles(n);
            patterns = Universe::perfect_matchings(n).collect();
            break;
        case PatternKind::NearMatching:
            if (n % 2 == 0) throw std::invalid_argument("near-matching pattern needs odd n");
            universe = Universe::hamilton_cycles(n);
            patterns = Universe::near_matchings(n).collect();
            break;
        case PatternKind::ShapePattern: {
            if (!shape) throw std::invalid_argument("shape pattern needs a shape");
            shape->require_two_regular(n);
            universe = Universe::two_regular(n, shape);
            patterns = labeled_copies(pattern_for_shape(*shape));
            break;
        }
    }
    std::vector<LabeledGraph> members = universe.collect();
    rep.universe_size = static_cast<long>(members.size());
    rep.pattern_count = static_cast<long>(patterns.size());

    ContainmentCounts counts = containment_counts_parallel(patterns, members);
    auto [cmin, cmax] = std::minmax_element(counts.per_pattern.begin(), counts.per_pattern.end());
    rep.class_size_min = *cmin;
    rep.class_size_max = *cmax;
    rep.class_sizes_uniform = *cmin == *cmax;
    auto [mmin, mmax] = std::minmax_element(counts.per_member.begin(), counts.per_member.end());
    rep.copies_min = *mmin;
    rep.copies_max = *mmax;
    rep.member_copies_uniform = *mmin == *mmax;

    if (kind == PatternKind::ShapePattern) {
        if (rep.class_size_min == 0)
            throw std::logic_error("shape pattern contained in no member; bound undefined");
        rep.bound = Rat(rep.universe_size, rep.class_size_min);
    } else {
        int h = n / 2;
        rep.bound = Rat(factorial(n), factorial(h) * pow_int(2, static_cast<unsigned>(h)));
    }
    return rep;
}

std::optional<LabeledGraph> family_hits_class_twice(const Family& fam,
                                                    std::span<const LabeledGraph> patterns) {
    for (const auto& p : patterns) {
        int hits = 0;
        for (const auto& m : fam.members)
            if (m.contains(p) && ++hits >= 2) return p;
    }
    return std::nullopt;
}

Family drop_edge_paths(const Family& cycle_family, Edge ab) {
    if (ab.first > ab.second) std::swap(ab.first, ab.second);
    Family out;
    out.n = cycle_family.n;
    out.predicate = cycle_family.predicate;
    out.universe_tag = "hamilton-paths";
    for (const auto& m : cycle_family.members) {
        if (!m.has_edge(ab.first, ab.second)) continue;
        auto edge_list = m.edges();
        GraphBuilder b(m.n());
        for (auto [u, v] : edge_list)
            if (!(u == ab.first && v == ab.second)) b.add(u, v);
        out.members.push_back(b.take());
    }
    std::sort(out.members.begin(), out.members.end());
    return out;
}

SandwichReport cycle_path_sandwich(int n, std::chrono::milliseconds budget) {
    SandwichReport rep;
    rep.n = n;
    auto pred = DoublingPredicate::max_degree_at_least(4);
    auto cycles = Universe::hamilton_cycles(n).collect();
    auto paths = Universe::hamilton_paths(n).collect();
    rep.cycles = max_family_exact(cycles, pred, budget, "hamilton-cycles");
    rep.paths = max_family_exact(paths, pred, budget, "hamilton-paths");

    // Best edge: the one whose cycle-family members, with that edge dropped,
    // form the largest Hamilton-path family.
    Int best = -1;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            Int size = 0;
            for (const auto& m : rep.cycles.witness.members)
                if (m.has_edge(a, b)) ++size;
            if (size > best) {
                best = size;
                rep.best_edge = {a, b};
            }
        }
    rep.best_edge_class_size = best;
    rep.ratio_target = Rat(2 * rep.cycles.value, n - 1);
    rep.paths_reach_ratio = Rat(rep.paths.value) >= rep.ratio_target;
    rep.cycles_ge_paths = rep.cycles.value >= rep.paths.value;
    return rep;
}

long incompatible_count(const LabeledGraph& h) {
    if (!is_hamilton_cycle(h))
        throw std::invalid_argument("h must be a Hamilton cycle");
    auto cycles = Universe::hamilton_cycles(h.n()).collect();
    return covering_incompatible_count(h, cycles);
}

long incompatible_count(const LabeledGraph& h, std::span<const LabeledGraph> cycles) {
    if (!is_hamilton_cycle(h))
        throw std::invalid_argument("h must be a Hamilton cycle");
    return covering_incompatible_count(h, cycles);
}

}  // namespace ddf
