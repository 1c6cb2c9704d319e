#pragma once

#include <optional>
#include <vector>

#include "kcol/graph.hpp"

namespace kcol {

inline constexpr int default_clique_cap = 100000;

// A shortest cycle as a cyclic vertex sequence, or nullopt for forests.
// A shortest cycle has no chord, so the result is an induced cycle.
std::optional<std::vector<vertex>> find_shortest_cycle(const graph& g);

// Four vertices inducing K4 minus the edge ab.
struct diamond {
    vertex a = 0;
    vertex b = 0;
    vertex c = 0;
    vertex d = 0;

    bool operator==(const diamond&) const = default;
};

// First diamond in lexicographic order of the (c, d) edge, then of the
// non-adjacent common-neighbor pair (a, b).
std::optional<diamond> find_diamond(const graph& g);

// All t-cliques, each ascending, in lexicographic order. Throws
// resource_error once more than `cap` cliques are found.
std::vector<std::vector<vertex>> enumerate_cliques(const graph& g, int t,
                                                   int cap = default_clique_cap);

} // namespace kcol
