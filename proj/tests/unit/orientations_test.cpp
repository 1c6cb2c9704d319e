#include <doctest.h>

#include "brute.hpp"
#include "kcol/errors.hpp"
#include "kcol/io.hpp"
#include "kcol/orientations.hpp"

using namespace kcol;

TEST_CASE("solve_min_indegree_orientation examples")
{
    const auto c4 = io::gen::cycle(4);
    const std::vector<int> ones4(4, 1);
    const auto res = solve_min_indegree_orientation(c4, ones4);
    REQUIRE(res.feasible());
    CHECK(verify_orientation_demands(res.oriented(), c4, ones4));
    CHECK(res.oriented().in_degrees(4) == ones4);

    const auto star = io::gen::complete_bipartite(1, 3);
    const std::vector<int> g{2, 1, 1, 1};
    const auto bad = solve_min_indegree_orientation(star, g);
    REQUIRE_FALSE(bad.feasible());
    CHECK(bad.violator() == vertex_set::all(4));
    CHECK(verify_violator(star, g, bad.violator()));

    CHECK(solve_min_indegree_orientation(io::gen::complete(4), ones4).feasible());
}

TEST_CASE("verify_orientation_demands and verify_violator")
{
    const auto c3 = io::gen::cycle(3);
    const std::vector<int> ones3(3, 1);
    orientation cyc{{{0, 1}, {1, 2}, {0, 2}}, {1, 2, 0}};
    CHECK(verify_orientation_demands(cyc, c3, ones3));

    const auto p3 = io::gen::path(3);
    orientation path{{{0, 1}, {1, 2}}, {1, 2}};
    CHECK_FALSE(verify_orientation_demands(path, p3, ones3));
    orientation partial{{{0, 1}}, {1}};
    CHECK_THROWS_AS(verify_orientation_demands(partial, p3, ones3), input_error);

    const std::vector<int> ones4(4, 1);
    CHECK_FALSE(verify_violator(io::gen::cycle(4), ones4, vertex_set::all(4)));
    CHECK_THROWS_AS(verify_violator(io::gen::cycle(4), ones4, vertex_set(4)), input_error);
}

TEST_CASE("orientation feasibility matches brute force")
{
    brute::rng r(5);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = r.between(1, 6);
        const auto g = brute::random_graph(r, n, 0.5);
        std::vector<int> demand;
        for (vertex v = 0; v < n; ++v)
            demand.push_back(r.between(0, 3));
        const auto res = solve_min_indegree_orientation(g, demand);
        CHECK(res.feasible() == brute::orientation_exists(g, demand));
        long long total = 0;
        for (int x : demand)
            total += x;
        CHECK(res.flow_value <= std::min<long long>(total, g.edge_count()));
        if (res.feasible()) {
            CHECK(verify_orientation_demands(res.oriented(), g, demand));
            // Lowering any demand keeps it feasible.
            auto lower = demand;
            for (auto& x : lower)
                x = x > 0 ? x - static_cast<int>(r.below(2)) : 0;
            CHECK(solve_min_indegree_orientation(g, lower).feasible());
        } else {
            CHECK(verify_violator(g, demand, res.violator()));
        }
    }
}

TEST_CASE("zero demand orients toward the smaller endpoint")
{
    const auto g = io::gen::complete(4);
    const std::vector<int> zero(4, 0);
    const auto res = solve_min_indegree_orientation(g, zero);
    REQUIRE(res.feasible());
    for (std::size_t i = 0; i < res.oriented().edges.size(); ++i)
        CHECK(res.oriented().heads[i] == res.oriented().edges[i].u);
}
