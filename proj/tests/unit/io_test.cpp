#include <doctest.h>

#include <fstream>

#include "brute.hpp"
#include "kcol/errors.hpp"
#include "kcol/io.hpp"

using namespace kcol;

TEST_CASE("parse_dimacs")
{
    const auto k3 = io::parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3");
    CHECK(k3.g == io::gen::complete(3));
    CHECK(k3.warnings.empty());

    const auto dup = io::parse_dimacs("p edge 2 1\ne 1 2\ne 2 1");
    CHECK(dup.g == io::gen::complete(2));
    REQUIRE(dup.warnings.size() == 1);
    CHECK(dup.warnings[0].find("duplicate") != std::string::npos);

    const auto commented = io::parse_dimacs("c hello\n\np col 3 5\ne 1 2\n");
    CHECK(commented.g.edge_count() == 1);
    CHECK(commented.warnings.size() == 1);

    CHECK_THROWS_WITH_AS(io::parse_dimacs("p edge 2 1\ne 1 3"), doctest::Contains("line 2"), input_error);
    CHECK_THROWS_WITH_AS(io::parse_dimacs("c only\ne 1 2\n"), doctest::Contains("line 2"), input_error);
    CHECK_THROWS_WITH_AS(io::parse_dimacs("c nothing here\n"), doctest::Contains("missing"), input_error);
    CHECK_THROWS_WITH_AS(io::parse_dimacs("p edge 2 1\ne 2 2\n"), doctest::Contains("self-loop"), input_error);
    CHECK_THROWS_WITH_AS(io::parse_dimacs("p edge 2 1\nx 1 2\n"), doctest::Contains("line 2"), input_error);
    CHECK_THROWS_AS(io::parse_dimacs("p edge 2 1\ne 1 two\n"), input_error);
}

TEST_CASE("write_dimacs round trip")
{
    const auto p = io::gen::petersen();
    const auto back = io::parse_dimacs(io::write_dimacs(p));
    CHECK(back.g == p);
    CHECK(back.warnings.empty());
}

TEST_CASE("graph6 examples")
{
    CHECK(io::parse_graph6("A_") == io::gen::complete(2));
    const auto empty5 = io::parse_graph6("D??");
    CHECK(empty5.vertex_count() == 5);
    CHECK(empty5.edge_count() == 0);
    CHECK(io::encode_graph6(empty5) == "D??");
    CHECK(io::encode_graph6(io::gen::petersen()) == "IheA@GUAo");
    CHECK(io::parse_graph6("?") == graph(0));
    CHECK(io::parse_graph6(">>graph6<<A_\n") == io::gen::complete(2));

    CHECK_THROWS_AS(io::parse_graph6("D?"), input_error);
    CHECK_THROWS_AS(io::parse_graph6("A_?"), input_error);
    CHECK_THROWS_AS(io::parse_graph6("A\x7f"), input_error);
    CHECK_THROWS_AS(io::parse_graph6("A "), input_error);
    CHECK_THROWS_AS(io::parse_graph6(""), input_error);
    CHECK_THROWS_AS(io::parse_graph6("~?"), input_error);
}

TEST_CASE("graph6 round trip on a reference corpus")
{
    std::ifstream f(KCOL_TEST_DATA "/corpus.g6");
    REQUIRE(f);
    int lines = 0;
    for (std::string s; std::getline(f, s); ++lines)
        CHECK(io::encode_graph6(io::parse_graph6(s)) == s);
    CHECK(lines == 27);
}

TEST_CASE("graph6 parse of encode is identity on generated graphs")
{
    brute::rng r(6);
    for (int n = 0; n <= 64; ++n) {
        const auto g = brute::random_graph(r, n, 0.3);
        CHECK(io::parse_graph6(io::encode_graph6(g)) == g);
    }
    const auto big = io::gen::random_regular(200, 3, 1);
    const auto s = io::encode_graph6(big);
    CHECK(s[0] == '~');
    CHECK(io::parse_graph6(s) == big);
}

TEST_CASE("parse_lists_json")
{
    const auto k2 = io::parse_lists_json(R"({"0":[0,1],"1":[0,1]})", 2);
    CHECK(k2.list_size(0) == 2);
    CHECK(k2.list_size(1) == 2);
    const auto one = io::parse_lists_json(R"({"0":[2,2,1]})", 1);
    CHECK(std::vector<int>(one[0].begin(), one[0].end()) == std::vector<int>{1, 2});

    CHECK_THROWS_WITH_AS(io::parse_lists_json(R"({"0":[0]})", 2), doctest::Contains("vertex 1 missing"), input_error);
    CHECK_THROWS_WITH_AS(io::parse_lists_json(R"({"0":[-1]})", 1), doctest::Contains("\"0\""), input_error);
    CHECK_THROWS_WITH_AS(io::parse_lists_json(R"({"0":3})", 1), doctest::Contains("\"0\""), input_error);
    CHECK_THROWS_WITH_AS(io::parse_lists_json(R"({"x":[1]})", 1), doctest::Contains("\"x\""), input_error);
    CHECK_THROWS_AS(io::parse_lists_json(R"({"5":[1]})", 1), input_error);
    CHECK_THROWS_AS(io::parse_lists_json("[", 1), input_error);
}

TEST_CASE("vertex values, partitions, colorings")
{
    CHECK(io::parse_vertex_values(R"({"1":3,"0":2})", 2, "g") == std::vector<int>{2, 3});
    CHECK(io::parse_vertex_values("[1,1,0]", 3, "g") == std::vector<int>{1, 1, 0});
    CHECK_THROWS_AS(io::parse_vertex_values("[1]", 2, "g"), input_error);
    CHECK_THROWS_AS(io::parse_vertex_values(R"({"0":-1})", 1, "g"), input_error);

    const auto p = io::parse_partition_json(R"({"A":[2,0],"heads":[[1,0,1]]})", 3);
    CHECK(p.a == vertex_set(3, {0, 2}));
    REQUIRE(p.heads);
    CHECK(p.heads->at({0, 1}) == 1);
    CHECK_THROWS_AS(io::parse_partition_json(R"({"A":[3]})", 3), input_error);
    CHECK_THROWS_AS(io::parse_partition_json(R"({"B":[]})", 3), input_error);

    const auto c = io::parse_coloring_json("[0,1,-1]", 3);
    CHECK(c[1] == 1);
    CHECK_FALSE(c.is_colored(2));
    CHECK_THROWS_AS(io::parse_coloring_json("[0,-2]", 2), input_error);
}

TEST_CASE("generators")
{
    const auto p = io::gen::petersen();
    CHECK(p.vertex_count() == 10);
    CHECK(p.edge_count() == 15);
    CHECK(is_regular(p));
    CHECK(p.max_degree() == 3);

    const auto q = io::gen::cube();
    CHECK(q.edge_count() == 12);
    CHECK(is_regular(q));

    const auto r = io::gen::random_regular(10, 3, 42);
    CHECK(r.vertex_count() == 10);
    CHECK(is_regular(r));
    CHECK(r.max_degree() == 3);
    CHECK(r == io::gen::random_regular(10, 3, 42));

    CHECK_THROWS_AS(io::gen::random_regular(5, 3, 1), input_error);
    CHECK_THROWS_AS(io::gen::random_regular(4, 4, 1), input_error);
    CHECK(io::gen::random_regular(6, 0, 1).edge_count() == 0);

    CHECK(io::gen::erdos_renyi(9, 0.5, 3) == io::gen::erdos_renyi(9, 0.5, 3));
    CHECK(io::gen::erdos_renyi(9, 1.0, 3) == io::gen::complete(9));
    CHECK(io::gen::erdos_renyi(9, 0.0, 3).edge_count() == 0);
    CHECK_THROWS_AS(io::gen::erdos_renyi(4, 1.5, 3), input_error);

    const std::vector<double> ab{2, 3};
    CHECK(io::gen::by_name("complete_bipartite", ab, 0).edge_count() == 6);
    CHECK_THROWS_AS(io::gen::by_name("cycle", ab, 0), input_error);
    CHECK_THROWS_AS(io::gen::by_name("wheel", {}, 0), input_error);
}
