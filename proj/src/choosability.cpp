#include "kcol/choosability.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "kcol/brooks.hpp"
#include "kcol/errors.hpp"
#include "kcol/orientations.hpp"
#include "peel.hpp"

namespace kcol {

namespace {

list_assignment restrict_lists(const list_assignment& lists, const std::vector<vertex>& to_parent)
{
    std::vector<std::vector<int>> out;
    out.reserve(to_parent.size());
    for (vertex p : to_parent)
        out.emplace_back(lists[p].begin(), lists[p].end());
    return list_assignment(std::move(out));
}

void lift(const coloring& local, const std::vector<vertex>& to_parent, coloring& parent)
{
    for (std::size_t i = 0; i < to_parent.size(); ++i)
        parent.assign(to_parent[i], local[static_cast<vertex>(i)]);
}

// Smallest color of v's list not used by an already colored neighbor.
int first_free(const graph& g, vertex v, const list_assignment& lists, const coloring& col)
{
    for (int c : lists[v]) {
        auto nb = g.neighbors(v);
        if (std::none_of(nb.begin(), nb.end(), [&](vertex w) { return col[w] == c; }))
            return c;
    }
    return -1;
}

void place(const graph& g, vertex v, const list_assignment& lists, coloring& col)
{
    const int c = first_free(g, v, lists, col);
    if (c < 0)
        throw invariant_violation("list of vertex " + std::to_string(v) + " exhausted by its neighbors");
    col.assign(v, c);
}

// Path/cycle walk order starting at an endpoint when there is one.
std::vector<vertex> walk_order(const graph& h)
{
    const int n = h.vertex_count();
    vertex start = 0;
    for (vertex v = 0; v < n; ++v)
        if (h.degree(v) <= 1) {
            start = v;
            break;
        }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<vertex> order;
    for (vertex cur = start; cur >= 0;) {
        order.push_back(cur);
        seen[cur] = 1;
        vertex next = -1;
        for (vertex w : h.neighbors(cur))
            if (!seen[w]) {
                next = w;
                break;
            }
        cur = next;
    }
    return order;
}

void list_color_into(const graph& g, const list_assignment& lists, coloring& out, list_brooks_trace* trace);

void list_color_regular(const graph& x, const list_assignment& lists, coloring& out, list_brooks_trace* trace)
{
    const int n = x.vertex_count();
    const auto a = large_independent_set(x);
    const auto crit = find_critical_cross_subgraph(x, a);
    const int order = crit.h.local.vertex_count();
    if (trace) {
        int cross = 0;
        bool two = true;
        for (vertex v = 0; v < order; ++v) {
            int d = 0;
            for (vertex w : crit.h.local.neighbors(v))
                if (crit.a_part.contains(v) != crit.a_part.contains(w))
                    ++d;
            two = two && d == 2;
            if (crit.a_part.contains(v))
                cross += d;
        }
        trace->critical.push_back({order, cross, two});
    }

    std::vector<char> in_h(static_cast<std::size_t>(n), 0);
    for (vertex p : crit.h.to_parent)
        in_h[p] = 1;
    auto rest = induced_subgraph(x, vertex_set::from_indicator(in_h).complement());
    coloring rest_col(rest.local.vertex_count());
    list_color_into(rest.local, restrict_lists(lists, rest.to_parent), rest_col, trace);
    lift(rest_col, rest.to_parent, out);

    std::vector<std::vector<int>> residual(static_cast<std::size_t>(order));
    for (vertex i = 0; i < order; ++i) {
        const vertex p = crit.h.to_parent[i];
        std::vector<int> taken;
        for (vertex w : x.neighbors(p))
            if (!in_h[w])
                taken.push_back(out[w]);
        for (int c : lists[p])
            if (std::find(taken.begin(), taken.end(), c) == taken.end())
                residual[i].push_back(c);
        if (static_cast<int>(residual[i].size()) < crit.h.local.degree(i))
            throw invariant_violation("residual list of vertex " + std::to_string(p)
                                      + " is smaller than its degree in the critical subgraph");
    }
    const auto q = build_cycle_orientation(crit);
    const auto inner = kernel_lemma_color(q, list_assignment(std::move(residual)));
    lift(inner, crit.h.to_parent, out);
}

void list_color_into(const graph& g, const list_assignment& lists, coloring& out, list_brooks_trace* trace)
{
    const int n = g.vertex_count();
    auto peel = detail::peel_to_base(g);
    for (auto& base : peel.bases) {
        const auto view = induced_subgraph(g, vertex_set(n, std::move(base.vertices)));
        const auto local_lists = restrict_lists(lists, view.to_parent);
        const auto& h = view.local;
        coloring local(h.vertex_count());
        switch (base.kind) {
        case detail::base_kind::small_degree:
            for (vertex v : walk_order(h))
                place(h, v, local_lists, local);
            break;
        case detail::base_kind::complete:
            for (vertex v = 0; v < h.vertex_count(); ++v)
                place(h, v, local_lists, local);
            break;
        case detail::base_kind::regular:
            list_color_regular(h, local_lists, local, trace);
            break;
        }
        lift(local, view.to_parent, out);
    }
    for (auto it = peel.order.rbegin(); it != peel.order.rend(); ++it)
        place(g, it->v, lists, out);
}

} // namespace

vertex_set large_independent_set(const graph& g)
{
    if (g.edge_count() == 0)
        throw input_error("large_independent_set needs a graph with at least one edge");
    const int delta = g.max_degree();
    const auto col = brooks_color(g);
    const int used = col.colors_used();
    if (used > delta)
        throw input_error("graph needs " + std::to_string(used) + " colors, more than its maximum degree "
                          + std::to_string(delta));
    std::vector<int> sizes(static_cast<std::size_t>(used), 0);
    for (int c : col.values())
        ++sizes[c];
    const int best = static_cast<int>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
    std::vector<vertex> seed;
    for (vertex v = 0; v < g.vertex_count(); ++v)
        if (col[v] == best)
            seed.push_back(v);
    return expand_to_maximal_independent(g, vertex_set(g.vertex_count(), std::move(seed)));
}

cross_subgraph find_critical_cross_subgraph(const graph& g, const vertex_set& a)
{
    const int n = g.vertex_count();
    if (a.ambient_size() != n)
        throw input_error("A-side ambient size does not match graph order");
    if (!is_independent(g, a))
        throw input_error("A-side is not independent");
    const auto in_a = a.indicator();
    std::vector<int> cross_deg(static_cast<std::size_t>(n), 0);
    long long cross = 0;
    for (vertex v = 0; v < n; ++v)
        for (vertex w : g.neighbors(v))
            if (in_a[v] != in_a[w])
                ++cross_deg[v];
    for (vertex v : a)
        cross += cross_deg[v];
    if (cross < n)
        throw input_error("only " + std::to_string(cross) + " cross edges for " + std::to_string(n)
                          + " vertices");

    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    long long size = n;
    for (bool removed = true; removed;) {
        removed = false;
        for (vertex v = 0; v < n; ++v) {
            if (!alive[v] || cross - cross_deg[v] < size - 1)
                continue;
            alive[v] = 0;
            cross -= cross_deg[v];
            --size;
            for (vertex w : g.neighbors(v))
                if (alive[w] && in_a[v] != in_a[w])
                    --cross_deg[w];
            removed = true;
            break;
        }
    }
    for (vertex v = 0; v < n; ++v)
        if (alive[v] && cross_deg[v] != 2)
            throw invariant_violation("minimal cross subgraph has cross degree "
                                      + std::to_string(cross_deg[v]) + " at vertex " + std::to_string(v));
    if (cross != size)
        throw invariant_violation("minimal cross subgraph has cross count different from its order");

    cross_subgraph out;
    out.h = induced_subgraph(g, vertex_set::from_indicator(alive));
    const auto& h = out.h.local;
    const int order = h.vertex_count();
    std::vector<vertex> a_local;
    for (vertex i = 0; i < order; ++i)
        if (in_a[out.h.to_parent[i]])
            a_local.push_back(i);
    out.a_part = vertex_set(order, std::move(a_local));
    out.b_part = out.a_part.complement();

    const auto local_a = out.a_part.indicator();
    auto cross_neighbors = [&](vertex v) {
        std::vector<vertex> nb;
        for (vertex w : h.neighbors(v))
            if (local_a[v] != local_a[w])
                nb.push_back(w);
        return nb;
    };
    std::vector<char> seen(static_cast<std::size_t>(order), 0);
    for (vertex start = 0; start < order; ++start) {
        if (seen[start])
            continue;
        std::vector<vertex> cycle{start};
        seen[start] = 1;
        vertex prev = start;
        vertex cur = cross_neighbors(start).front();
        while (cur != start) {
            cycle.push_back(cur);
            seen[cur] = 1;
            const auto nb = cross_neighbors(cur);
            const vertex next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
        }
        out.cycles.push_back(std::move(cycle));
    }
    return out;
}

ab_digraph build_cycle_orientation(const cross_subgraph& x)
{
    const auto& h = x.h.local;
    const int order = h.vertex_count();
    if (x.a_part.ambient_size() != order || x.b_part != x.a_part.complement())
        throw input_error("cross subgraph sides do not partition its vertices");
    const auto in_a = x.a_part.indicator();

    head_map heads;
    int cross = 0;
    for (vertex v : x.a_part)
        for (vertex w : h.neighbors(v)) {
            if (in_a[w])
                throw input_error("A-part of the cross subgraph is not independent");
            ++cross;
        }
    std::vector<int> seen(static_cast<std::size_t>(order), 0);
    for (const auto& cycle : x.cycles) {
        const std::size_t len = cycle.size();
        for (std::size_t i = 0; i < len; ++i) {
            const vertex from = cycle[i];
            const vertex to = cycle[(i + 1) % len];
            if (from < 0 || from >= order || to < 0 || to >= order || in_a[from] == in_a[to]
                || !h.adjacent(from, to))
                throw input_error("cycle step " + std::to_string(from) + "->" + std::to_string(to)
                                  + " is not a cross edge");
            ++seen[from];
            if (!heads.emplace(normalized({from, to}), to).second)
                throw input_error("cross cycles reuse an edge");
        }
    }
    if (static_cast<int>(heads.size()) != cross || cross != order
        || std::any_of(seen.begin(), seen.end(), [](int s) { return s != 1; }))
        throw input_error("cross cycles do not partition the cross edges");

    auto q = build_ab_digraph(h, x.a_part, heads);
    for (vertex v = 0; v < order; ++v)
        if (q.arcs().out_degree(v) > h.degree(v) - 1)
            throw invariant_violation("cycle orientation gives vertex " + std::to_string(v)
                                      + " out-degree above degree - 1");
    return q;
}

coloring list_brooks_color(const graph& g, const list_assignment& lists, list_brooks_trace* trace)
{
    const int n = g.vertex_count();
    if (lists.size() != n)
        throw input_error("list assignment covers " + std::to_string(lists.size()) + " vertices, graph has "
                          + std::to_string(n));
    const auto bounds = component_bounds(g);
    for (vertex v = 0; v < n; ++v)
        if (lists.list_size(v) < bounds[v])
            throw input_error("vertex " + std::to_string(v) + " has a list of " + std::to_string(lists.list_size(v))
                              + " colors; needs at least " + std::to_string(bounds[v]));

    coloring col(n);
    list_color_into(g, lists, col, trace);
    if (!col.total() || !is_proper(g, col))
        throw invariant_violation("list coloring is not a proper total coloring");
    for (vertex v = 0; v < n; ++v)
        if (!lists.contains(v, col[v]))
            throw invariant_violation("vertex " + std::to_string(v) + " colored off its list");
    return col;
}

choosability_witness general_tool_witness(const graph& g, const vertex_set& a, std::span<const int> f)
{
    const int n = g.vertex_count();
    if (n == 0)
        throw input_error("general tool needs a nonempty graph");
    if (static_cast<int>(f.size()) != n)
        throw input_error("f must be defined on every vertex");
    if (a.ambient_size() != n)
        throw input_error("A-side ambient size does not match graph order");
    if (!is_independent(g, a))
        throw input_error("A-side is not independent");
    std::vector<int> demand(static_cast<std::size_t>(n));
    for (vertex v = 0; v < n; ++v) {
        if (f[v] < 0 || f[v] > g.degree(v) + 1)
            throw input_error("f(" + std::to_string(v) + ") = " + std::to_string(f[v])
                              + " is outside [0, degree + 1]");
        demand[v] = g.degree(v) + 1 - f[v];
    }
    const auto in_a = a.indicator();
    long long cross = 0;
    for (vertex v : a)
        cross += g.degree(v);
    const long long need = std::accumulate(demand.begin(), demand.end(), 0LL);
    if (cross < need)
        throw condition_unmet("only " + std::to_string(cross) + " edges leave A; the condition needs "
                              + std::to_string(need));

    std::vector<char> in_h(static_cast<std::size_t>(n), 1);
    for (int iteration = 1; iteration <= n; ++iteration) {
        auto view = induced_subgraph(g, vertex_set::from_indicator(in_h));
        const auto& h = view.local;
        const int order = h.vertex_count();
        std::vector<edge> cross_edges;
        for (const auto& e : h.edges())
            if (in_a[view.to_parent[e.u]] != in_a[view.to_parent[e.v]])
                cross_edges.push_back(e);
        std::vector<int> local_demand(static_cast<std::size_t>(order));
        long long local_need = 0;
        for (vertex i = 0; i < order; ++i) {
            local_demand[i] = demand[view.to_parent[i]];
            local_need += local_demand[i];
        }
        if (static_cast<long long>(cross_edges.size()) < local_need)
            throw invariant_violation("cross edges fell below total demand while shrinking H");

        const auto cross_graph = graph::from_edges(order, cross_edges);
        const auto outcome = solve_min_indegree_orientation(cross_graph, local_demand);
        if (!outcome.feasible()) {
            const auto& bad = outcome.violator();
            if (bad.size() == order)
                throw invariant_violation("violator covers all of H");
            for (vertex i : bad)
                in_h[view.to_parent[i]] = 0;
            continue;
        }

        const auto& o = outcome.oriented();
        head_map heads;
        for (std::size_t i = 0; i < o.edges.size(); ++i)
            heads.emplace(o.edges[i], o.heads[i]);
        std::vector<vertex> a_local;
        for (vertex i = 0; i < order; ++i)
            if (in_a[view.to_parent[i]])
                a_local.push_back(i);
        choosability_witness w;
        w.q = build_ab_digraph(h, vertex_set(order, std::move(a_local)), heads);
        w.f_h.resize(static_cast<std::size_t>(order));
        for (vertex i = 0; i < order; ++i) {
            const vertex p = view.to_parent[i];
            w.f_h[i] = f[p] + h.degree(i) - g.degree(p);
            if (w.q.arcs().out_degree(i) > w.f_h[i] - 1)
                throw invariant_violation("witness orientation exceeds f_H - 1 at vertex " + std::to_string(p));
        }
        w.h = std::move(view);
        w.iterations = iteration;
        return w;
    }
    throw invariant_violation("general tool loop did not terminate within |G| iterations");
}

} // namespace kcol
