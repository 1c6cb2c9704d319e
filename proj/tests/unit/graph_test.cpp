#include <doctest.h>

#include "brute.hpp"
#include "kcol/errors.hpp"
#include "kcol/graph.hpp"
#include "kcol/io.hpp"
#include "kcol/search.hpp"

using namespace kcol;

TEST_CASE("build_graph collapses duplicates and rejects bad pairs")
{
    const auto k3 = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.edge_count() == 3);
    CHECK(is_complete(k3));

    const auto k2 = build_graph(2, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(k2.edge_count() == 1);

    CHECK_THROWS_WITH_AS(build_graph(1, {{0, 0}}), doctest::Contains("self-loop"), input_error);
    CHECK_THROWS_AS(build_graph(2, {{0, 2}}), input_error);
    CHECK_THROWS_AS(build_graph(2, {{-1, 1}}), input_error);
}

TEST_CASE("neighbors are sorted and degrees consistent")
{
    const auto g = build_graph(5, {{4, 0}, {2, 0}, {3, 1}, {0, 1}});
    auto nb = g.neighbors(0);
    CHECK(std::vector<vertex>(nb.begin(), nb.end()) == std::vector<vertex>{1, 2, 4});
    CHECK(g.degree(0) == 3);
    CHECK(g.max_degree() == 3);
    CHECK(g.min_degree() == 1);
    CHECK(g.adjacent(1, 3));
    CHECK_FALSE(g.adjacent(2, 3));
    CHECK(g.edges() == std::vector<edge>{{0, 1}, {0, 2}, {0, 4}, {1, 3}});
}

TEST_CASE("induced subgraphs relabel and keep the parent map")
{
    const auto k4 = io::gen::complete(4);
    const auto sub = induced_subgraph(k4, vertex_set(4, {0, 1, 2}));
    CHECK(is_complete(sub.local));
    CHECK(sub.local.vertex_count() == 3);

    const auto c5 = io::gen::cycle(5);
    const auto pair = induced_subgraph(c5, vertex_set(5, {0, 2}));
    CHECK(pair.local.edge_count() == 0);
    CHECK(pair.to_parent == std::vector<vertex>{0, 2});
    CHECK(pair.from_parent(5) == std::vector<vertex>{0, -1, 1, -1, -1});

    const auto p = io::gen::petersen();
    const auto outer = induced_subgraph(p, vertex_set(10, {0, 1, 2, 3, 4}));
    CHECK(outer.local == io::gen::cycle(5));
}

TEST_CASE("components")
{
    const auto g = build_graph(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
    const auto comps = components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == vertex_set(5, {0, 1, 2}));
    CHECK(comps[1] == vertex_set(5, {3, 4}));

    CHECK(components(graph(3)).size() == 3);
    CHECK(components(io::gen::petersen()).size() == 1);
}

TEST_CASE("edges_between")
{
    const auto c4 = io::gen::cycle(4);
    CHECK(edges_between(c4, vertex_set(4, {0, 2}), vertex_set(4, {1, 3})).count == 4);
    const auto k4 = io::gen::complete(4);
    const auto star = edges_between(k4, vertex_set(4, {0}), vertex_set(4, {1, 2, 3}));
    CHECK(star.count == 3);
    CHECK(star.pairs == std::vector<edge>{{0, 1}, {0, 2}, {0, 3}});
    CHECK_THROWS_AS(edges_between(k4, vertex_set(4, {0, 1}), vertex_set(4, {1, 2})), input_error);

    // Independent 4-set of the Petersen graph: 3 * 4 edges leave it.
    const auto p = io::gen::petersen();
    const vertex_set a(10, {0, 2, 8, 9});
    REQUIRE(is_independent(p, a));
    CHECK(edges_between(p, a, a.complement()).count == 12);
}

TEST_CASE("vertex_set basics")
{
    const vertex_set s(6, {4, 1, 4, 2});
    CHECK(s.size() == 3);
    CHECK(s.contains(4));
    CHECK_FALSE(s.contains(0));
    CHECK(s.complement() == vertex_set(6, {0, 3, 5}));
    CHECK(vertex_set::from_indicator(s.indicator()) == s);
    CHECK_THROWS_AS(vertex_set(3, {3}), input_error);
}

TEST_CASE("digraph reversal and underlying graph")
{
    const auto d = digraph::from_arcs(3, std::vector<edge>{{0, 1}, {1, 0}, {1, 2}, {1, 2}});
    CHECK(d.arc_count() == 3);
    CHECK(d.has_arc(1, 2));
    CHECK_FALSE(d.has_arc(2, 1));
    CHECK(d.reversed().has_arc(2, 1));
    CHECK(d.underlying().edge_count() == 2);
    CHECK_THROWS_AS(digraph::from_arcs(2, std::vector<edge>{{1, 1}}), input_error);
}

TEST_CASE("shortest cycle")
{
    CHECK_FALSE(find_shortest_cycle(io::gen::path(4)).has_value());
    const auto tri = find_shortest_cycle(io::gen::complete(4));
    REQUIRE(tri);
    CHECK(tri->size() == 3);

    const auto p = io::gen::petersen();
    const auto c = find_shortest_cycle(p);
    REQUIRE(c);
    CHECK(c->size() == 5);
    for (std::size_t i = 0; i < c->size(); ++i)
        CHECK(p.adjacent((*c)[i], (*c)[(i + 1) % c->size()]));
    const auto induced = induced_subgraph(p, vertex_set(10, *c));
    CHECK(induced.local.edge_count() == 5);
}

namespace {

// Girth by checking every vertex subset for an induced cycle of that size.
int brute_girth(const graph& g)
{
    const int n = g.vertex_count();
    int best = 0;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        const int k = __builtin_popcount(s);
        if (k < 3 || (best && k >= best))
            continue;
        std::vector<vertex> members;
        for (vertex v = 0; v < n; ++v)
            if (s >> v & 1)
                members.push_back(v);
        const auto sub = induced_subgraph(g, vertex_set(n, members));
        if (sub.local.edge_count() == k && sub.local.min_degree() == 2 && brute::connected(sub.local))
            best = k;
    }
    return best;
}

} // namespace

TEST_CASE("shortest cycle length matches subset enumeration")
{
    brute::rng r(7);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = r.between(3, 9);
        const auto g = brute::random_graph(r, n, 0.3);
        const auto c = find_shortest_cycle(g);
        const int girth = brute_girth(g);
        CHECK(static_cast<int>(c ? c->size() : 0) == girth);
    }
    CHECK(brute_girth(io::gen::petersen()) == 5);
}

TEST_CASE("diamond search")
{
    const auto d = find_diamond(build_graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
    REQUIRE(d);
    CHECK(*d == diamond{0, 1, 2, 3});
    CHECK_FALSE(find_diamond(io::gen::cycle(6)));
    CHECK_FALSE(find_diamond(io::gen::petersen()));
    CHECK_FALSE(find_diamond(io::gen::complete(3)));
}

TEST_CASE("clique enumeration")
{
    CHECK(enumerate_cliques(io::gen::complete(4), 4, 100) == std::vector<std::vector<vertex>>{{0, 1, 2, 3}});
    CHECK(enumerate_cliques(io::gen::cycle(5), 3, 100).empty());

    std::vector<edge> edges;
    for (vertex base : {0, 4})
        for (vertex i = 0; i < 4; ++i)
            for (vertex j = i + 1; j < 4; ++j)
                edges.push_back({base + i, base + j});
    for (vertex i = 0; i < 4; ++i)
        edges.push_back({i, i + 4});
    const auto g = graph::from_edges(8, edges);
    const auto found = enumerate_cliques(g, 4, 100);
    std::vector<std::vector<vertex>> brute;
    for (std::uint32_t s = 0; s < 256; ++s) {
        if (__builtin_popcount(s) != 4)
            continue;
        std::vector<vertex> m;
        for (vertex v = 0; v < 8; ++v)
            if (s >> v & 1)
                m.push_back(v);
        if (induced_subgraph(g, vertex_set(8, m)).local.edge_count() == 6)
            brute.push_back(m);
    }
    std::sort(brute.begin(), brute.end());
    CHECK(found == brute);
    CHECK(found.size() == 2);

    CHECK_THROWS_AS(enumerate_cliques(io::gen::complete(8), 3, 10), resource_error);
}
