#pragma once

#include <span>
#include <vector>

#include "kcol/coloring.hpp"
#include "kcol/graph.hpp"
#include "kcol/kernels.hpp"

namespace kcol {

// Induced subgraph in which every vertex has exactly two cross edges
// (edges between the A-part and the B-part). All ids in `a_part`, `b_part`
// and `cycles` are local to `h`.
struct cross_subgraph {
    subgraph_view h;
    vertex_set a_part;
    vertex_set b_part;
    // Vertex-disjoint cycles partitioning the cross edges. Each starts at its
    // smallest vertex and continues toward that vertex's smaller cross neighbor.
    std::vector<std::vector<vertex>> cycles;
};

// (H, Q, f_H) with Q an A/B orientation of H and outdeg_Q(v) <= f_H(v) - 1,
// which makes H f_H-choosable (and f_H-paintable). Ids in `q` and `f_h` are
// local to `h`.
struct choosability_witness {
    subgraph_view h;
    ab_digraph q;
    std::vector<int> f_h;
    int iterations = 0;
};

// Largest color class of brooks_color(g) grown to a maximal independent set.
// Its size is at least ceil(n / max degree) whenever brooks_color needs no
// more than max-degree colors; otherwise throws input_error.
vertex_set large_independent_set(const graph& g);

// Shrinks V(g) one vertex at a time (smallest removable id first) while the
// cross-edge count stays at least the order. At a one-vertex-minimal set
// every cross degree is at least cross - |H| + 2; summing gives cross = |H|
// and every cross degree equal to 2.
//
// Requires `a` independent with at least n cross edges.
cross_subgraph find_critical_cross_subgraph(const graph& g, const vertex_set& a);

// Bidirects H[B] and orients the cross edges around their cycles, so every
// vertex has outdeg <= deg_H - 1.
ab_digraph build_cycle_orientation(const cross_subgraph& x);

// Record of one critical cross subgraph found during list_brooks_color.
struct critical_record {
    int order = 0;
    int cross_edges = 0;
    bool all_cross_degrees_two = false;
};

struct list_brooks_trace {
    std::vector<critical_record> critical;
};

// Colors g from `lists`, provided every list has at least the color_bound of
// its vertex's component. Throws input_error naming the first undersized
// vertex.
//
// Regular components of degree >= 3 that are not complete are handled by
// picking a critical cross subgraph H, coloring the rest first, then
// finishing H by the kernel argument on its cycle orientation.
coloring list_brooks_color(const graph& g, const list_assignment& lists,
                           list_brooks_trace* trace = nullptr);

// Constructive form of the general choosability tool. With
// g(v) = d(v) + 1 - f(v), repeatedly solves the in-degree problem on the
// cross graph of H (demand g) and removes the returned violator from H until
// an orientation exists; then bidirects H[B] to obtain Q.
//
// Throws input_error for a dependent A or f(v) > d(v) + 1, and
// condition_unmet when the cross-edge count is below the total demand.
choosability_witness general_tool_witness(const graph& g, const vertex_set& a,
                                          std::span<const int> f);

} // namespace kcol
