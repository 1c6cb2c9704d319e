#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace kcol {

using vertex = int;

// Unordered pair of vertex ids. Graph-producing functions normalize to u < v.
struct edge {
    vertex u = 0;
    vertex v = 0;

    auto operator<=>(const edge&) const = default;
};

inline edge normalized(edge e) { return e.u < e.v ? e : edge{e.v, e.u}; }

// Sorted, deduplicated subset of [0, ambient_size()).
class vertex_set {
public:
    vertex_set() = default;
    explicit vertex_set(int ambient_size);
    vertex_set(int ambient_size, std::vector<vertex> members);

    static vertex_set all(int ambient_size);
    static vertex_set from_indicator(std::span<const char> indicator);

    int ambient_size() const { return ambient_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    bool contains(vertex v) const;

    std::span<const vertex> members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }
    vertex operator[](int i) const { return members_[static_cast<std::size_t>(i)]; }

    vertex_set complement() const;
    std::vector<char> indicator() const;

    bool operator==(const vertex_set&) const = default;

private:
    int ambient_ = 0;
    std::vector<vertex> members_;
};

// Simple undirected graph on 0..n-1, stored as CSR with sorted neighbor runs.
// Immutable after construction.
class graph {
public:
    graph() : offsets_(1, 0) {}
    explicit graph(int n);

    // Collapses duplicates (in either orientation); rejects self-loops and
    // out-of-range ids.
    static graph from_edges(int n, std::span<const edge> edges);

    int vertex_count() const { return static_cast<int>(offsets_.size()) - 1; }
    int edge_count() const { return static_cast<int>(targets_.size() / 2); }

    std::span<const vertex> neighbors(vertex v) const
    {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    int degree(vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    int max_degree() const;
    int min_degree() const;
    bool adjacent(vertex u, vertex v) const;

    // All edges as (u, v) with u < v, lexicographically ordered.
    std::vector<edge> edges() const;

    bool operator==(const graph&) const = default;

private:
    std::vector<int> offsets_;
    std::vector<vertex> targets_;
};

graph build_graph(int n, std::span<const edge> edges);
graph build_graph(int n, std::initializer_list<edge> edges);

// Directed graph without self-loops. Opposite arcs may coexist; parallel arcs
// in the same direction are collapsed on construction.
class digraph {
public:
    digraph() : offsets_(1, 0) {}
    explicit digraph(int n);

    // Arc (u, v) means u -> v.
    static digraph from_arcs(int n, std::span<const edge> arcs);

    int vertex_count() const { return static_cast<int>(offsets_.size()) - 1; }
    int arc_count() const { return static_cast<int>(targets_.size()); }

    std::span<const vertex> out_neighbors(vertex v) const
    {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    int out_degree(vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    bool has_arc(vertex from, vertex to) const;

    std::vector<edge> arcs() const;
    digraph reversed() const;
    // Underlying simple graph: one edge per adjacent pair.
    graph underlying() const;

    bool operator==(const digraph&) const = default;

private:
    std::vector<int> offsets_;
    std::vector<vertex> targets_;
};

// Relabelled induced subgraph. Local vertex i corresponds to to_parent[i];
// to_parent is ascending.
struct subgraph_view {
    graph local;
    std::vector<vertex> to_parent;

    // Parent id -> local id, or -1 for vertices outside the subgraph.
    std::vector<vertex> from_parent(int parent_size) const;
};

subgraph_view induced_subgraph(const graph& g, const vertex_set& s);
digraph induced_subdigraph(const digraph& d, const vertex_set& s);

// Connected components, each ascending, ordered by smallest member.
std::vector<vertex_set> components(const graph& g);

struct cross_edges {
    int count = 0;
    // Each pair is (s, t) with s in S and t in T, ordered by s then t.
    std::vector<edge> pairs;
};

// Edges with one endpoint in s and the other in t. s and t must be disjoint.
cross_edges edges_between(const graph& g, const vertex_set& s, const vertex_set& t);

bool is_independent(const graph& g, const vertex_set& s);
bool is_regular(const graph& g);
bool is_complete(const graph& g);

} // namespace kcol
