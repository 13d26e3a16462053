#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ucat/datasets.hpp"
#include "ucat/errors.hpp"
#include "ucat/graph.hpp"
#include "ucat/scans.hpp"

using namespace ucat;

namespace {

Scalar Q(const std::string& s) { return parse_scalar(s); }

GraphPL example1() { return *build_dataset("graph_example_1").target.graph; }
GraphPL example2() { return *build_dataset("graph_example_2").target.graph; }

std::mt19937_64 rng(99);

} // namespace

TEST_CASE("make_graph validation") {
    CHECK_THROWS_AS(make_graph({"a"}, {{"a", "a"}}), GraphMismatch);
    CHECK_THROWS_AS(make_graph({"a", "b"}, {{"a", "b"}, {"b", "a"}}), GraphMismatch);
    CHECK_THROWS_AS(make_graph({"a", "a"}, {}), GraphMismatch);
}

TEST_CASE("superlevel structure") {
    auto f = example1();
    // c = 3: two components around the two peaks only
    auto s3 = superlevel(f, Q("3"));
    CHECK(s3.components == 2);
    CHECK(s3.vertices.size() == 2);
    CHECK(s3.acyclic);
    // above the global max: empty
    auto s9 = superlevel(f, Q("9"));
    CHECK(!s9.nonempty);
    CHECK(s9.components == 0);
    // example 2 at c = 1: the whole graph, with its cycles
    auto g2 = example2();
    auto s1 = superlevel(g2, Q("1"));
    CHECK(s1.components == 1);
    CHECK(s1.vertices.size() == 5);
    CHECK(!s1.acyclic);
}

TEST_CASE("is_unimodal_graph") {
    auto ds = build_dataset("graph_example_1");
    CHECK(is_unimodal_graph(*ds.functions.at("u1").graph));
    CHECK(is_unimodal_graph(*ds.functions.at("u2").graph));
    CHECK(!is_unimodal_graph(*ds.target.graph));

    // cycle with constant value: pi0-unimodal but not contractible
    auto cyc = make_graph_pl(
        make_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}),
        {{"a", Q("1")}, {"b", Q("1")}, {"c", Q("1")}});
    CHECK(is_unimodal_graph(cyc, UnimodalMode::Pi0));
    CHECK(!is_unimodal_graph(cyc, UnimodalMode::Contractible));
}

TEST_CASE("verify_combination") {
    auto ds = build_dataset("graph_example_1");
    auto f = *ds.target.graph;
    auto u1 = *ds.functions.at("u1").graph;
    auto u2 = *ds.functions.at("u2").graph;
    CHECK(verify_combination({u1, u2}, CombinationRule::Sum, f));

    // breaking one value breaks the identity
    auto broken = u1;
    broken.values[broken.graph.at("a1")] = Q("0");
    CHECK(!verify_combination({broken, u2}, CombinationRule::Sum, f));

    // max on the subdivided second example
    auto ds2 = build_dataset("graph_example_2");
    auto fs = *ds2.functions.at("f_subdivided").graph;
    auto m1 = *ds2.functions.at("u1").graph;
    auto m2 = *ds2.functions.at("u2").graph;
    CHECK(verify_combination({m1, m2}, CombinationRule::Max, fs));
    CHECK(!verify_combination({m1}, CombinationRule::Max, fs));

    // radical sums: v1 + v2 + v3 = sqrt(f)
    auto sq = *ds.functions.at("sqrt_f").graph;
    auto v1 = *ds.functions.at("v1").graph;
    auto v2 = *ds.functions.at("v2").graph;
    auto v3 = *ds.functions.at("v3").graph;
    CHECK(verify_combination({v1, v2, v3}, CombinationRule::Sum, sq));
    CHECK(is_unimodal_graph(v1));
    CHECK(is_unimodal_graph(v2));
    CHECK(is_unimodal_graph(v3));

    auto other = make_graph_pl(make_graph({"z"}, {}), {{"z", Q("1")}});
    CHECK_THROWS_AS(verify_combination({other}, CombinationRule::Sum, f), GraphMismatch);
}

TEST_CASE("path_value") {
    auto f = example1();
    CHECK(path_value(f, GraphPoint::at_vertex("a1"), GraphPoint::at_vertex("b1")) == 1);
    CHECK(path_value(f, GraphPoint::at_vertex("a1"), GraphPoint::at_vertex("a1")) == 5);
    CHECK(path_value(f, GraphPoint::at_vertex("c"), GraphPoint::at_vertex("q")) == 1);

    // two maxima joined by a dipping path
    auto saddle = make_graph_pl(make_graph({"l", "m", "r"}, {{"l", "m"}, {"m", "r"}}),
                                {{"l", Q("3")}, {"m", Q("1")}, {"r", Q("3")}});
    CHECK(path_value(saddle, GraphPoint::at_vertex("l"), GraphPoint::at_vertex("r")) == 1);

    // interior points: midpoint of the edge l-m has value 2
    CHECK(path_value(saddle, GraphPoint::on_edge(0, Q("1/2")), GraphPoint::at_vertex("r")) == 1);
    CHECK(path_value(saddle, GraphPoint::on_edge(0, Q("1/2")), GraphPoint::at_vertex("l")) == 2);
    CHECK(path_value(saddle, GraphPoint::on_edge(0, Q("1/4")), GraphPoint::on_edge(0, Q("3/4"))) ==
          Q("3/2"));

    auto split = make_graph_pl(make_graph({"x", "y"}, {}), {{"x", Q("1")}, {"y", Q("1")}});
    CHECK_THROWS_AS(path_value(split, GraphPoint::at_vertex("x"), GraphPoint::at_vertex("y")),
                    NoPath);
}

TEST_CASE("pv properties on random graphs") {
    std::uniform_int_distribution<int> nd(4, 9), val(0, 6), den(1, 3);
    for (int iter = 0; iter < 120; ++iter) {
        int n = nd(rng);
        std::vector<VertexId> ids;
        for (int i = 0; i < n; ++i) ids.push_back("v" + std::to_string(i));
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (int i = 1; i < n; ++i) {
            std::uniform_int_distribution<int> parent(0, i - 1);
            edges.push_back({ids[static_cast<size_t>(parent(rng))], ids[static_cast<size_t>(i)]});
        }
        std::uniform_int_distribution<int> extra(0, 2);
        for (int e = extra(rng); e > 0; --e) {
            std::uniform_int_distribution<int> pick(0, n - 1);
            int a = pick(rng), b = pick(rng);
            if (a == b) continue;
            bool dup = false;
            for (auto& [u, v] : edges)
                dup = dup || (u == ids[static_cast<size_t>(std::min(a, b))] &&
                              v == ids[static_cast<size_t>(std::max(a, b))]);
            if (!dup)
                edges.push_back({ids[static_cast<size_t>(std::min(a, b))],
                                 ids[static_cast<size_t>(std::max(a, b))]});
        }
        std::map<VertexId, Scalar> values;
        for (auto& id : ids) values[id] = scalar_from_long(val(rng), den(rng));
        auto gf = make_graph_pl(make_graph(ids, edges), values);

        std::uniform_int_distribution<int> pick(0, n - 1);
        auto s = ids[static_cast<size_t>(pick(rng))];
        auto t = ids[static_cast<size_t>(pick(rng))];
        auto u = ids[static_cast<size_t>(pick(rng))];
        Scalar st = path_value(gf, GraphPoint::at_vertex(s), GraphPoint::at_vertex(t));
        Scalar ts = path_value(gf, GraphPoint::at_vertex(t), GraphPoint::at_vertex(s));
        CHECK(st == ts); // symmetry
        Scalar su = path_value(gf, GraphPoint::at_vertex(s), GraphPoint::at_vertex(u));
        Scalar tu = path_value(gf, GraphPoint::at_vertex(t), GraphPoint::at_vertex(u));
        CHECK(su >= scalar_min(st, tu)); // ultrametric-like bound

        // scaling by 3 scales pv and preserves unimodality
        std::map<VertexId, Scalar> scaled;
        for (auto& id : ids) scaled[id] = values[id] * 3;
        auto gs = make_graph_pl(make_graph(ids, edges), scaled);
        CHECK(path_value(gs, GraphPoint::at_vertex(s), GraphPoint::at_vertex(t)) == st * 3);
        CHECK(is_unimodal_graph(gs) == is_unimodal_graph(gf));
    }
}

TEST_CASE("lower_bound_check") {
    auto ds2 = build_dataset("graph_example_2");
    auto f = *ds2.target.graph;
    CHECK(lower_bound_check(f, {"d", "e"}).ok);
    auto one = lower_bound_check(f, {"d"});
    CHECK(!one.ok);

    // a unimodal function with its mode point always passes
    auto ds = build_dataset("graph_example_1");
    auto u1 = *ds.functions.at("u1").graph;
    CHECK(lower_bound_check(u1, {"a1"}).ok);
    CHECK_THROWS_AS(lower_bound_check(f, {}), PreconditionViolated);
}

TEST_CASE("morse-smale trees") {
    CHECK_THROWS_AS(make_tree({"a", "b"}, {Q("3"), Q("3")}, {{0, 1, Q("4")}}), NotATree);
    CHECK_THROWS_AS(make_tree({"a", "b"}, {Q("3"), Q("3")}, {}), NotATree);

    auto path = make_tree({"l", "m", "r"}, {Q("5"), Q("2"), Q("5")},
                          {{0, 1, Q("4")}, {1, 2, Q("4")}});
    CHECK(tree_path_value(path, 0, 2) == 4);
    CHECK(tree_path_value(path, 0, 0) == 5);
    CHECK(tree_criterion(path, {0, 2})); // 4 + 4 > 2 at the middle
    CHECK(!tree_criterion(path, {0}));   // pv(l, r) = 4 < 5
    auto cover = min_tree_cover(path);
    CHECK(cover.n == 2);

    auto both = make_tree({"l", "r"}, {Q("3"), Q("3")}, {{0, 1, Q("1")}});
    CHECK(tree_criterion(both, {0, 1})); // vacuous
    CHECK(!tree_criterion(both, {0}));
    CHECK(min_tree_cover(both).n == 2);

    auto single = make_tree({"only"}, {Q("7")}, {});
    CHECK(min_tree_cover(single).n == 1);

    // star with three leaves at 3 and saddles 1: any two chosen leave the
    // third at 1 + 1 < 3
    auto star = make_tree({"c", "l1", "l2", "l3"}, {Q("9"), Q("3"), Q("3"), Q("3")},
                          {{0, 1, Q("1")}, {0, 2, Q("1")}, {0, 3, Q("1")}});
    CHECK(min_tree_cover(star).n == 3);
}

TEST_CASE("tree monotonicity") {
    auto path = make_tree({"l", "m", "r"}, {Q("5"), Q("2"), Q("5")},
                          {{0, 1, Q("4")}, {1, 2, Q("4")}});
    int c1 = min_tree_cover(tree_power(path, 1)).n;
    int c2 = min_tree_cover(tree_power(path, 2)).n;
    int c3 = min_tree_cover(tree_power(path, 3)).n;
    CHECK(c1 == 2);
    CHECK(c1 <= c2);
    CHECK(c2 <= c3);

    auto rep = tree_monotonicity_scan(120, {1, 2, 3}, 2024);
    CHECK(rep.violations == 0);
}

TEST_CASE("scan reports are deterministic") {
    auto a = updown_scan(200, {Q("1/2")}, 7);
    auto b = updown_scan(200, {Q("1/2")}, 7);
    CHECK(a.violations == b.violations);
    CHECK(a.violations == 0);
}
