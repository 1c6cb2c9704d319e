#pragma once

#include <span>
#include <vector>

#include "kcol/coloring.hpp"
#include "kcol/graph.hpp"
#include "kcol/search.hpp"

namespace kcol {

// Counts of how often each reduction fired during one brooks_color call.
struct brooks_trace {
    int small_degree = 0;  // components with max degree <= 2
    int complete = 0;      // complete components, colored rainbow
    int peeled = 0;        // vertices removed for having non-maximum degree
    int hitting_class = 0; // regular components with max degree >= 4
    int diamond = 0;       // cubic components reduced by removing a diamond
    int cycle_surgery = 0; // cubic components reduced around an induced cycle
};

// Colors `g` properly. Each connected component X receives at most
// max{3, max degree of X} colors, except a complete component on
// (max degree + 1) vertices, which receives exactly that many.
//
// Components are reduced until they are paths/cycles, complete, or regular.
// Regular components of degree >= 4 are split by a color class meeting every
// maximum clique; cubic ones by removing a diamond or an induced cycle.
// The reductions run on an explicit work stack, so the call depth does not
// grow with the graph.
//
// Colors are compacted to 0..k-1 before returning.
coloring brooks_color(const graph& g, brooks_trace* trace = nullptr);

// The color budget of a connected graph: max{3, max degree}, or
// max degree + 1 when the graph is complete on max degree + 1 vertices.
int color_bound(const graph& connected);

// color_bound of the component containing each vertex.
std::vector<int> component_bounds(const graph& g);

// Smallest color that appears on every maximum-degree clique of `x`.
// `x` must be regular of degree >= 4 without a clique on degree + 1
// vertices, and `partial` a proper coloring of x - v using colors below the
// degree, with v itself uncolored.
int find_hitting_color(const graph& x, vertex v, const coloring& partial);

// Greedily grows an independent set to a maximal one, scanning vertices in
// ascending order.
vertex_set expand_to_maximal_independent(const graph& g, const vertex_set& s);

// Extends a proper 3-coloring of g minus the diamond to all of g: a and b
// share a color, then c and d take the smallest free colors.
//
// Only the local cubic structure is required: c and d have no neighbors
// outside the diamond and a, b have at most one each.
coloring extend_diamond_coloring(const graph& g, const diamond& d, const coloring& partial);

// Colors a chordless cycle from 2-element lists that are not all equal.
// `lists` is indexed by host vertex id; the result has lists.size() entries
// with only the cycle vertices colored.
coloring extend_cycle_coloring(std::span<const vertex> cycle, const list_assignment& lists);

} // namespace kcol
