#include "kcol/orientations.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "kcol/errors.hpp"
#include "max_flow.hpp"

namespace kcol {

namespace {

void check_demand(const graph& g, std::span<const int> demand)
{
    if (static_cast<int>(demand.size()) != g.vertex_count())
        throw input_error("demand function must be defined on every vertex");
    for (std::size_t v = 0; v < demand.size(); ++v)
        if (demand[v] < 0)
            throw input_error("negative demand at vertex " + std::to_string(v));
}

} // namespace

std::vector<int> orientation::in_degrees(int n) const
{
    std::vector<int> in(static_cast<std::size_t>(n), 0);
    for (vertex h : heads)
        ++in[h];
    return in;
}

std::vector<edge> orientation::arcs() const
{
    std::vector<edge> out;
    out.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
        out.push_back(heads[i] == edges[i].v ? edge{edges[i].u, edges[i].v} : edge{edges[i].v, edges[i].u});
    return out;
}

orientation_outcome solve_min_indegree_orientation(const graph& g, std::span<const int> demand)
{
    check_demand(g, demand);
    const int n = g.vertex_count();
    const auto es = g.edges();
    const int m = static_cast<int>(es.size());
    // Nodes: source, m edge-nodes, n vertex-nodes, sink.
    const int source = 0;
    const int edge_base = 1;
    const int vertex_base = 1 + m;
    const int sink = 1 + m + n;
    detail::max_flow net(sink + 1);

    std::vector<int> to_u(static_cast<std::size_t>(m));
    std::vector<int> to_v(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        net.add_arc(source, edge_base + i, 1);
        to_u[i] = net.add_arc(edge_base + i, vertex_base + es[i].u, 1);
        to_v[i] = net.add_arc(edge_base + i, vertex_base + es[i].v, 1);
    }
    long long total = 0;
    for (vertex v = 0; v < n; ++v) {
        if (demand[v] > 0)
            net.add_arc(vertex_base + v, sink, demand[v]);
        total += demand[v];
    }

    orientation_outcome out;
    out.flow_value = net.run(source, sink);
    if (out.flow_value == total) {
        orientation o;
        o.edges = es;
        o.heads.reserve(es.size());
        for (int i = 0; i < m; ++i) {
            if (net.flow_on(to_v[i]) > 0)
                o.heads.push_back(es[i].v);
            else
                o.heads.push_back(es[i].u);
        }
        out.result = std::move(o);
        return out;
    }

    const auto reach = net.source_side(source);
    std::vector<vertex> h;
    for (vertex v = 0; v < n; ++v)
        if (!reach[vertex_base + v])
            h.push_back(v);
    out.result = vertex_set(n, std::move(h));
    return out;
}

bool verify_orientation_demands(const orientation& o, const graph& g, std::span<const int> demand)
{
    check_demand(g, demand);
    if (o.heads.size() != o.edges.size())
        throw input_error("orientation has a different number of edges and heads");
    std::vector<edge> given;
    given.reserve(o.edges.size());
    for (std::size_t i = 0; i < o.edges.size(); ++i) {
        const edge e = normalized(o.edges[i]);
        if (o.heads[i] != e.u && o.heads[i] != e.v)
            throw input_error("head " + std::to_string(o.heads[i]) + " is not an endpoint of its edge");
        given.push_back(e);
    }
    std::sort(given.begin(), given.end());
    const auto expected = g.edges();
    for (const auto& e : expected)
        if (!std::binary_search(given.begin(), given.end(), e))
            throw input_error("orientation misses edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    if (given.size() != expected.size())
        return false;

    const auto in = o.in_degrees(g.vertex_count());
    for (vertex v = 0; v < g.vertex_count(); ++v)
        if (in[v] < demand[v])
            return false;
    return true;
}

bool verify_violator(const graph& g, std::span<const int> demand, const vertex_set& h)
{
    check_demand(g, demand);
    if (h.empty())
        throw input_error("violator must be nonempty");
    if (h.ambient_size() != g.vertex_count())
        throw input_error("violator ambient size does not match graph order");
    const auto in_h = h.indicator();
    long long touching = 0;
    for (const auto& e : g.edges())
        if (in_h[e.u] || in_h[e.v])
            ++touching;
    long long need = 0;
    for (vertex v : h)
        need += demand[v];
    return touching < need;
}

} // namespace kcol
