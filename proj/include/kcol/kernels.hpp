#pragma once

#include <map>

#include "kcol/coloring.hpp"
#include "kcol/graph.hpp"

namespace kcol {

// Orientation of a graph around an independent side A: every edge inside
// B = V - A is a pair of opposite arcs, every A-B edge is a single arc, and
// there are no arcs inside A. Every such digraph is kernel-perfect, and
// every induced subdigraph is again of this shape.
class ab_digraph {
public:
    ab_digraph() = default;

    int vertex_count() const { return arcs_.vertex_count(); }
    const digraph& arcs() const { return arcs_; }
    const digraph& in_arcs() const { return in_arcs_; }
    const graph& underlying() const { return underlying_; }
    const vertex_set& a_side() const { return a_; }
    vertex_set b_side() const { return a_.complement(); }
    bool in_a(vertex v) const { return in_a_[v] != 0; }

private:
    friend ab_digraph make_ab_digraph(digraph arcs, const vertex_set& a);

    digraph arcs_;
    digraph in_arcs_;
    graph underlying_;
    vertex_set a_;
    std::vector<char> in_a_;
};

// Head endpoint for each A-B edge, keyed by the normalized edge (u < v).
using head_map = std::map<edge, vertex>;

// Bidirects G[B] and orients each A-B edge toward its assigned head.
ab_digraph build_ab_digraph(const graph& g, const vertex_set& a, const head_map& cross_heads);

// Validates an arbitrary digraph against the A/B shape.
ab_digraph make_ab_digraph(digraph arcs, const vertex_set& a);

// Kernel of d, or of the subdigraph induced by `within`. Either the A-part
// absorbs every B-vertex, or the smallest B-vertex with no arc into the
// A-part joins the kernel and it and its neighbors are dropped.
vertex_set find_kernel_ab(const ab_digraph& d);
vertex_set find_kernel_ab(const ab_digraph& d, const vertex_set& within);

// Colors every vertex from its own list, given |lists[v]| >= outdeg(v) + 1.
// Colors are processed in ascending order; each one goes to a kernel of the
// uncolored vertices whose lists still contain it.
coloring kernel_lemma_color(const ab_digraph& d, const list_assignment& lists);

// Painter's answer in the online game when Lister reveals `revealed`: a
// kernel of the revealed subdigraph.
vertex_set painter_move(const ab_digraph& d, const vertex_set& revealed);

} // namespace kcol
