#include <doctest.h>

#include "brute.hpp"
#include "kcol/brooks.hpp"
#include "kcol/choosability.hpp"
#include "kcol/errors.hpp"
#include "kcol/io.hpp"
#include "kcol/oracles.hpp"

using namespace kcol;

namespace {

graph diamond_graph() { return build_graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

void check_cross_subgraph(const graph& g, const vertex_set& a, const cross_subgraph& x)
{
    const int k = x.h.local.vertex_count();
    REQUIRE(k > 0);
    std::vector<int> cross_degree(static_cast<std::size_t>(k), 0);
    int cross = 0;
    for (const auto& e : x.h.local.edges())
        if (x.a_part.contains(e.u) != x.a_part.contains(e.v)) {
            ++cross;
            ++cross_degree[e.u];
            ++cross_degree[e.v];
        }
    CHECK(cross == k);
    for (int d : cross_degree)
        CHECK(d == 2);
    for (vertex v = 0; v < k; ++v)
        CHECK(x.a_part.contains(v) == a.contains(x.h.to_parent[v]));

    // The cycles cover every vertex once and alternate sides.
    std::vector<int> seen(static_cast<std::size_t>(k), 0);
    for (const auto& cyc : x.cycles) {
        CHECK(cyc.front() == *std::min_element(cyc.begin(), cyc.end()));
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            ++seen[cyc[i]];
            const vertex u = cyc[i];
            const vertex w = cyc[(i + 1) % cyc.size()];
            CHECK(x.h.local.adjacent(u, w));
            CHECK(x.a_part.contains(u) != x.a_part.contains(w));
        }
    }
    for (int s : seen)
        CHECK(s == 1);
    (void)g;
}

} // namespace

TEST_CASE("large_independent_set")
{
    const auto p = io::gen::petersen();
    const auto s = large_independent_set(p);
    CHECK(is_independent(p, s));
    CHECK(s.size() >= 4);

    const auto q3 = io::gen::cube();
    const auto sq = large_independent_set(q3);
    CHECK(is_independent(q3, sq));
    CHECK(sq.size() == 4);

    const auto k33 = io::gen::complete_bipartite(3, 3);
    CHECK(large_independent_set(k33).size() == 3);

    CHECK_THROWS_AS(large_independent_set(graph(3)), input_error);
    CHECK_THROWS_AS(large_independent_set(io::gen::complete(4)), input_error);
}

TEST_CASE("find_critical_cross_subgraph")
{
    const auto c6 = io::gen::cycle(6);
    const vertex_set a6(6, {0, 2, 4});
    const auto x6 = find_critical_cross_subgraph(c6, a6);
    CHECK(x6.h.to_parent.size() == 6);
    REQUIRE(x6.cycles.size() == 1);
    CHECK(x6.cycles[0] == std::vector<vertex>{0, 1, 2, 3, 4, 5});
    check_cross_subgraph(c6, a6, x6);

    const auto c4 = io::gen::cycle(4);
    const auto x4 = find_critical_cross_subgraph(c4, vertex_set(4, {0, 2}));
    CHECK(x4.h.local.vertex_count() == 4);
    CHECK(x4.cycles.size() == 1);
    CHECK(x4.cycles[0].size() == 4);

    const auto q3 = io::gen::cube();
    const vertex_set side(8, {0, 3, 5, 6});
    REQUIRE(is_independent(q3, side));
    check_cross_subgraph(q3, side, find_critical_cross_subgraph(q3, side));

    CHECK_THROWS_AS(find_critical_cross_subgraph(io::gen::path(3), vertex_set(3, {1})), input_error);
}

TEST_CASE("find_critical_cross_subgraph on random regular graphs")
{
    for (int trial = 0; trial < 80; ++trial) {
        const int d = 3 + trial % 3;
        const int n = 2 * (d + 2 + trial % 6);
        const auto g = io::gen::random_regular(n, d, 300 + trial);
        if (std::any_of(components(g).begin(), components(g).end(), [&](const vertex_set& c) {
                return c.size() == d + 1;
            }))
            continue;
        const auto a = large_independent_set(g);
        check_cross_subgraph(g, a, find_critical_cross_subgraph(g, a));
    }
}

TEST_CASE("build_cycle_orientation")
{
    const auto c4 = io::gen::cycle(4);
    const auto q = build_cycle_orientation(find_critical_cross_subgraph(c4, vertex_set(4, {0, 2})));
    for (vertex v = 0; v < 4; ++v)
        CHECK(q.arcs().out_degree(v) == 1);

    const auto c6 = io::gen::cycle(6);
    const auto q6 = build_cycle_orientation(find_critical_cross_subgraph(c6, vertex_set(6, {0, 2, 4})));
    for (vertex v = 0; v < 6; ++v)
        CHECK(q6.arcs().out_degree(v) == 1);
    CHECK(q6.arcs().has_arc(0, 1));

    const auto q3 = io::gen::cube();
    const auto x = find_critical_cross_subgraph(q3, vertex_set(8, {0, 3, 5, 6}));
    const auto qq = build_cycle_orientation(x);
    for (vertex v = 0; v < x.h.local.vertex_count(); ++v) {
        const int dh = x.h.local.degree(v);
        if (x.a_part.contains(v)) {
            CHECK(dh == 2);
            CHECK(qq.arcs().out_degree(v) == 1);
        } else {
            CHECK(qq.arcs().out_degree(v) <= dh - 1);
        }
    }
}

TEST_CASE("list_brooks_color examples")
{
    const auto p = io::gen::petersen();
    const list_assignment same(std::vector<std::vector<int>>(10, {0, 1, 2}));
    CHECK(oracle::verify_coloring(p, list_brooks_color(p, same), &same));

    brute::rng r(3);
    const std::vector<int> sizes(10, 3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto lists = brute::random_lists(r, sizes, 6);
        list_brooks_trace trace;
        CHECK(oracle::verify_coloring(p, list_brooks_color(p, lists, &trace), &lists));
        for (const auto& rec : trace.critical) {
            CHECK(rec.cross_edges == rec.order);
            CHECK(rec.all_cross_degrees_two);
        }
    }

    const auto k4 = io::gen::complete(4);
    const auto lists4 = brute::random_lists(r, std::vector<int>(4, 4), 7);
    CHECK(oracle::verify_coloring(k4, list_brooks_color(k4, lists4), &lists4));

    const list_assignment short_list({{0, 1}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2},
                                      {0, 1, 2}, {0, 1, 2}, {0, 1, 2}});
    CHECK_THROWS_WITH_AS(list_brooks_color(p, short_list), doctest::Contains("vertex 0"), input_error);
}

TEST_CASE("list_brooks_color on mixed random graphs")
{
    brute::rng r(19);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = r.between(1, 10);
        const auto g = brute::random_graph(r, n, 0.4);
        const auto bounds = component_bounds(g);
        const auto lists = brute::random_lists(r, bounds, 9);
        const auto c = list_brooks_color(g, lists);
        CHECK(oracle::verify_coloring(g, c, &lists));
    }
}

TEST_CASE("general_tool_witness")
{
    SUBCASE("C4 with f = d")
    {
        const std::vector<int> f(4, 2);
        const auto w = general_tool_witness(io::gen::cycle(4), vertex_set(4, {0, 2}), f);
        CHECK(w.h.local.vertex_count() == 4);
        CHECK(w.f_h == std::vector<int>(4, 2));
        for (vertex v = 0; v < 4; ++v)
            CHECK(w.q.arcs().out_degree(v) == 1);
        CHECK(oracle::is_f_choosable(w.h.local, w.f_h));
    }
    SUBCASE("diamond with f = d")
    {
        const auto g = diamond_graph();
        const std::vector<int> f{2, 3, 3, 2};
        const auto w = general_tool_witness(g, vertex_set(4, {0, 3}), f);
        const int k = w.h.local.vertex_count();
        REQUIRE(k > 0);
        for (vertex v = 0; v < k; ++v) {
            const vertex p = w.h.to_parent[v];
            CHECK(w.f_h[v] == f[p] + w.h.local.degree(v) - g.degree(p));
            CHECK(w.q.arcs().out_degree(v) <= w.f_h[v] - 1);
        }
        CHECK(oracle::is_f_choosable(w.h.local, w.f_h));
        CHECK(brute::f_choosable(w.h.local, w.f_h, 6));
    }
    SUBCASE("odd cycle and clique are rejected")
    {
        const auto c5 = io::gen::cycle(5);
        CHECK_THROWS_AS(general_tool_witness(c5, vertex_set(5, {0, 2}), std::vector<int>(5, 2)), condition_unmet);
        const auto k4 = io::gen::complete(4);
        CHECK_THROWS_AS(general_tool_witness(k4, vertex_set(4, {0}), std::vector<int>(4, 3)), condition_unmet);
    }
    SUBCASE("bad inputs")
    {
        CHECK_THROWS_AS(general_tool_witness(io::gen::cycle(4), vertex_set(4, {0, 1}), std::vector<int>(4, 2)),
                        input_error);
        CHECK_THROWS_AS(general_tool_witness(io::gen::cycle(4), vertex_set(4, {0, 2}), std::vector<int>(4, 4)),
                        input_error);
    }
}

TEST_CASE("general_tool_witness soundness on random graphs")
{
    brute::rng r(77);
    int witnesses = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = r.between(2, 7);
        const auto g = brute::random_graph(r, n, 0.55);
        if (g.edge_count() == 0)
            continue;
        const auto a = expand_to_maximal_independent(g, vertex_set(n, {static_cast<vertex>(r.below(n))}));
        std::vector<int> f;
        for (vertex v = 0; v < n; ++v)
            f.push_back(r.between(1, g.degree(v) + 1));
        choosability_witness w;
        try {
            w = general_tool_witness(g, a, f);
        } catch (const condition_unmet&) {
            continue;
        }
        ++witnesses;
        const int k = w.h.local.vertex_count();
        REQUIRE(k > 0);
        for (vertex v = 0; v < k; ++v)
            CHECK(w.q.arcs().out_degree(v) <= w.f_h[v] - 1);
        CHECK(w.iterations <= n);
        // Any lists of size f_H are colorable by the kernel argument.
        const auto lists = brute::random_lists(r, w.f_h, 2 * k + 2);
        CHECK(oracle::verify_coloring(w.h.local, kernel_lemma_color(w.q, lists), &lists));
        int total = 0;
        for (int x : w.f_h)
            total += x;
        if (k <= 5 && total <= 14)
            CHECK(oracle::is_f_choosable(w.h.local, w.f_h));
    }
    CHECK(witnesses > 20);
}
