#pragma once

#include <vector>

#include "kcol/graph.hpp"

namespace kcol::detail {

enum class base_kind { small_degree, complete, regular };

struct base_component {
    std::vector<vertex> vertices; // ascending
    int max_degree = 0;
    base_kind kind = base_kind::small_degree;
};

struct peeled_vertex {
    vertex v = 0;
    // Maximum degree of the component v was removed from.
    int component_max_degree = 0;
};

struct peel_result {
    std::vector<peeled_vertex> order;
    std::vector<base_component> bases;
};

// For each connected non-regular component with maximum degree hi >= 3,
// repeatedly removes its smallest remaining vertex of degree below hi (degrees
// counted among remaining vertices). What survives is hi-regular. Bases are
// components that have maximum degree <= 2, are complete, or are regular.
// Coloring the bases and then re-inserting `order` back to front gives every
// re-inserted vertex fewer colored neighbors than its component's max degree.
peel_result peel_to_base(const graph& g);

} // namespace kcol::detail
