#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kcol/coloring.hpp"
#include "kcol/graph.hpp"
#include "kcol/kernels.hpp"

namespace kcol::io {

struct parsed_graph {
    graph g;
    std::vector<std::string> warnings;
};

// DIMACS .col with 1-based ids. Errors are input_error prefixed "line N:".
parsed_graph parse_dimacs(std::string_view text);
std::string write_dimacs(const graph& g);

// One graph6 line; an optional ">>graph6<<" header and trailing whitespace
// are tolerated. Supports n < 2^18.
graph parse_graph6(std::string_view line);
std::string encode_graph6(const graph& g);

// {"0":[...], "1":[...]} covering exactly the vertices 0..n-1.
list_assignment parse_lists_json(std::string_view text, int n);

// Non-negative integer per vertex, either {"0":2,...} or [2,...].
// `what` names the quantity in error messages.
std::vector<int> parse_vertex_values(std::string_view text, int n, std::string_view what);

struct partition {
    vertex_set a;
    std::optional<head_map> heads;
};

// {"A":[ids]} with an optional "heads":[[u,v,h],...] for the A-B edges.
partition parse_partition_json(std::string_view text, int n);

// A coloring as [c0, c1, ...] or {"0":c0, ...}; -1 leaves a vertex uncolored.
coloring parse_coloring_json(std::string_view text, int n);

// Seeded generators. Randomness comes from mt19937_64 with integer-only
// sampling, so output is identical across platforms.
namespace gen {
graph cycle(int n);
graph path(int n);
graph complete(int n);
graph complete_bipartite(int a, int b);
graph petersen();
graph cube();
graph random_regular(int n, int d, std::uint64_t seed);
graph erdos_renyi(int n, double p, std::uint64_t seed);

// Dispatch by name: cycle, path, complete, complete_bipartite, petersen,
// cube, random_regular, erdos_renyi.
graph by_name(std::string_view kind, std::span<const double> params, std::uint64_t seed);
} // namespace gen

} // namespace kcol::io
