#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ddf/distinguish.hpp"
#include "ddf/io.hpp"
#include "oracles.hpp"

using namespace ddf;

namespace {

const auto kBudget = std::chrono::milliseconds(60000);

LabeledGraph cycle(int n, std::vector<int> order) {
    GraphBuilder b(n);
    for (std::size_t i = 0; i + 1 < order.size(); ++i) b.add(order[i], order[i + 1]);
    b.add(order.back(), order.front());
    return b.take();
}

Channel identity_channel(int k) {
    Channel ch;
    for (int i = 1; i <= k; ++i) {
        ch.inputs.push_back("a" + std::to_string(i));
        ch.outputs.push_back("b" + std::to_string(i));
    }
    ch.w.assign(static_cast<std::size_t>(k) * k, Rat(0));
    for (int i = 0; i < k; ++i) ch.w[static_cast<std::size_t>(i) * k + i] = 1;
    return ch;
}

}  // namespace

TEST_CASE("shannon distinguishability on graphs") {
    auto c1 = cycle(5, {1, 2, 3, 4, 5});
    auto c2 = cycle(5, {1, 3, 5, 2, 4});
    CHECK(shannon_distinguishable(c1, c2));
    CHECK(shannon_distinguishable(c2, c1));

    auto a = cycle(4, {1, 2, 3, 4});
    auto b = cycle(4, {1, 2, 4, 3});
    CHECK_FALSE(shannon_distinguishable(a, b));

    CHECK_THROWS_AS(shannon_distinguishable(a, a), std::invalid_argument);
    CHECK_THROWS_AS(shannon_distinguishable(a, c1), std::invalid_argument);

    // empty neighborhoods are disjoint from everything
    auto e1 = make_graph(3, {{1, 2}});
    auto e2 = make_graph(3, {{2, 3}});
    CHECK(shannon_distinguishable(e1, e2));
}

TEST_CASE("distinguishability agrees with doubling compatibility on 2-regular pairs") {
    auto pred = DoublingPredicate::max_degree_at_least(4);
    for (int n = 3; n <= 6; ++n) {
        auto all = Universe::two_regular(n).collect();
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j)
                CHECK(shannon_distinguishable(all[i], all[j]) ==
                      doubling_compatible(all[i], all[j], pred));
    }
}

TEST_CASE("nu of Hamilton cycles equals the family-solver maximum") {
    auto r4 = nu(canonical_hamilton_cycle(4), kBudget);
    CHECK(r4.value == 1);
    CHECK(r4.status == SolveReport::Status::Exact);

    auto r5 = nu(canonical_hamilton_cycle(5), kBudget);
    auto q5 = max_family_exact(Universe::hamilton_cycles(5).collect(),
                               DoublingPredicate::max_degree_at_least(4), kBudget,
                               "hamilton-cycles");
    CHECK(r5.value == q5.value);
    CHECK(r5.value == 6);
    CHECK(verify_family(q5.witness).ok);
}

TEST_CASE("nu rejects nonpositive budgets") {
    CHECK_THROWS_AS(nu(make_graph(3, {}), std::chrono::milliseconds(0)), std::invalid_argument);
}

TEST_CASE("nu bounds and small graphs") {
    auto empty = make_graph(4, {});
    CHECK(nu(empty, kBudget).value == 1);

    auto single = make_graph(3, {{1, 2}});
    auto r = nu(single, kBudget);
    CHECK(r.value == 3);  // all three copies pairwise distinguishable
    CHECK(Int(labeled_copies(single).size()) == 3);

    // nu never exceeds the copy count
    for (const auto& g : {cycle(5, {1, 2, 3, 4, 5}), make_graph(5, {{1, 2}, {3, 4}})}) {
        auto rep = nu(g, kBudget);
        CHECK(rep.value >= 1);
        CHECK(rep.value <= Int(labeled_copies(g).size()));
    }
}

TEST_CASE("remark scan: nu = 1 when no two vertices have disjoint neighborhoods") {
    // scans every graph on <= n vertices; distinct-pair and (u,u) readings
    // coincide for n >= 2 (an isolated vertex is disjoint from every vertex)
    CHECK(scan_disjoint_neighborhood_remark(4).empty());

    // On 5 vertices the claim has counterexamples, reported rather than
    // asserted.  Smallest family: K5 minus a triangle.  Every two vertices
    // share a neighbor, yet moving the missing triangle elsewhere gives a
    // copy with disjoint neighborhoods at a vertex that switched sides.
    auto counterexamples = scan_disjoint_neighborhood_remark(5);
    CHECK(counterexamples.size() == 115);
    for (const auto& c : counterexamples) CHECK(c.nu_value >= 2);

    auto g = make_graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    bool hypothesis = true;  // no two vertices with disjoint neighborhoods
    for (int u = 1; u <= 5; ++u)
        for (int v = u + 1; v <= 5; ++v)
            if ((g.neighbor_mask(u) & g.neighbor_mask(v)) == 0) hypothesis = false;
    CHECK(hypothesis);
    auto moved = make_graph(5, {{1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
    CHECK(shannon_distinguishable(g, moved));  // vertex 3: {1,2} vs {4,5}
    CHECK(nu(g, kBudget).value == 2);
}

TEST_CASE("channel validation and digraph construction") {
    Channel noiseless;
    noiseless.inputs = {"x"};
    noiseless.outputs = {"y"};
    noiseless.w = {Rat(1)};
    auto cd = channel_digraph(noiseless);
    CHECK(cd.graph.n() == 2);
    CHECK(cd.graph.arc_count() == 2);
    CHECK(cd.graph.has_arc(1, 2));
    CHECK(cd.graph.has_arc(2, 1));

    auto id2 = identity_channel(2);
    auto cd2 = channel_digraph(id2);
    CHECK(cd2.graph.n() == 4);
    CHECK(cd2.graph.has_arc(1, 3));
    CHECK(cd2.graph.has_arc(2, 4));
    CHECK_FALSE(cd2.graph.has_arc(1, 4));
    CHECK_FALSE(cd2.graph.has_arc(2, 3));
    for (int y : {3, 4})
        for (int v = 1; v <= 4; ++v)
            if (v != y) CHECK(cd2.graph.has_arc(y, v));

    Channel bad = noiseless;
    bad.w = {Rat(0)};
    CHECK_THROWS_WITH_AS(channel_digraph(bad), doctest::Contains("sums to"),
                         std::invalid_argument);
    Channel neg = noiseless;
    neg.outputs = {"y1", "y2"};
    neg.w = {Rat(3, 2), Rat(-1, 2)};
    CHECK_THROWS_AS(channel_digraph(neg), std::invalid_argument);
}

TEST_CASE("channel csv parsing") {
    auto ch = parse_channel_csv(",y1,y2\nx1,1/2,0.5\nx2,0,1\n");
    CHECK(ch.inputs == std::vector<std::string>{"x1", "x2"});
    CHECK(ch.outputs == std::vector<std::string>{"y1", "y2"});
    CHECK(ch.at(0, 0) == Rat(1, 2));
    CHECK(ch.at(0, 1) == Rat(1, 2));
    CHECK(ch.at(1, 1) == Rat(1));
    CHECK_THROWS_AS(parse_channel_csv(",y\nx,2/3\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_channel_csv(",y\nx\n"), std::invalid_argument);
}

TEST_CASE("digraph nu on channel digraphs") {
    Channel noiseless;
    noiseless.inputs = {"x"};
    noiseless.outputs = {"y"};
    noiseless.w = {Rat(1)};
    auto cd = channel_digraph(noiseless);
    auto rep = nu(cd.graph, kBudget);
    CHECK(rep.copy_count == 1);  // the swap is an automorphism
    CHECK(rep.value == 1);
}

TEST_CASE("composition class demos") {
    auto id2 = identity_channel(2);

    // m = 1, concentrated composition: a single-vertex class
    auto one = composition_class_nu(id2, 1, {1, 0}, kBudget);
    CHECK(one.class_size == 1);
    CHECK(one.value == 1);
    CHECK(one.rate.contains(Rat(1)));

    // m = 1, any composition: nu >= 1
    auto other = composition_class_nu(id2, 1, {0, 1}, kBudget);
    CHECK(other.value >= 1);

    // m = 2, composition (1,1): both orderings are mutually distinguishable
    auto mixed = composition_class_nu(id2, 2, {1, 1}, kBudget);
    CHECK(mixed.class_size == 2);
    CHECK(mixed.value == 2);
    CHECK(mixed.status == SolveReport::Status::Exact);
    // rate = sqrt(2)
    CHECK(mixed.rate.lo * mixed.rate.lo <= 2);
    CHECK(mixed.rate.hi * mixed.rate.hi >= 2);

    // a fully noisy channel distinguishes nothing: nu = 1
    Channel noisy;
    noisy.inputs = {"a", "b"};
    noisy.outputs = {"0", "1"};
    noisy.w = {Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)};
    auto nn = composition_class_nu(noisy, 2, {1, 1}, kBudget);
    CHECK(nn.class_size == 2);
    CHECK(nn.value == 1);

    CHECK_THROWS_AS(composition_class_nu(id2, 3, {2, 1}, kBudget), std::invalid_argument);
    CHECK_THROWS_AS(composition_class_nu(id2, 2, {1, 2}, kBudget), std::invalid_argument);
    CHECK_THROWS_AS(composition_class_nu(id2, 2, {1}, kBudget), std::invalid_argument);
    auto big = composition_class_nu(id2, 3, {2, 1}, kBudget, 4);  // cap is configurable
    CHECK(big.class_size == 3);
    CHECK(big.value == 3);
}

TEST_CASE("composition report json shape") {
    auto id2 = identity_channel(2);
    auto mixed = composition_class_nu(id2, 2, {1, 1}, kBudget);
    auto j = composition_report_json(mixed, false);
    CHECK(j.at("value").get<std::string>() == "2");
    CHECK(j.at("class_size").get<std::string>() == "2");
    CHECK_FALSE(j.contains("elapsed_ms"));
    CHECK(composition_report_json(mixed, true).contains("elapsed_ms"));
}
