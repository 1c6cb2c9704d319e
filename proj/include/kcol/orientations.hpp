#pragma once

#include <span>
#include <variant>
#include <vector>

#include "kcol/graph.hpp"

namespace kcol {

// One head per edge; edges[i] is oriented toward heads[i].
struct orientation {
    std::vector<edge> edges;
    std::vector<vertex> heads;

    std::vector<int> in_degrees(int n) const;
    std::vector<edge> arcs() const;
};

struct orientation_outcome {
    // Either an orientation meeting every demand, or a nonempty vertex set H
    // with ||H|| + ||H, G-H|| < sum of demands over H.
    std::variant<orientation, vertex_set> result;
    long long flow_value = 0;

    bool feasible() const { return std::holds_alternative<orientation>(result); }
    const orientation& oriented() const { return std::get<orientation>(result); }
    const vertex_set& violator() const { return std::get<vertex_set>(result); }
};

// Decides whether g admits an orientation with in-degree(v) >= demand[v] for
// every v, via max-flow on source -> edge -> endpoint -> sink. Heads are read
// off the saturated edge->endpoint arcs; edges without flow point at their
// smaller endpoint. On a shortfall the violator is the set of vertices not
// reachable from the source in the residual network.
orientation_outcome solve_min_indegree_orientation(const graph& g, std::span<const int> demand);

// True iff `o` orients exactly the edges of g and meets every demand.
// Throws input_error when an edge of g is missing from `o`.
bool verify_orientation_demands(const orientation& o, const graph& g, std::span<const int> demand);

// True iff the edges touching h are strictly fewer than its total demand.
bool verify_violator(const graph& g, std::span<const int> demand, const vertex_set& h);

} // namespace kcol
