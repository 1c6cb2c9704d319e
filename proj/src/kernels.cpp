#include "kcol/kernels.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "kcol/errors.hpp"

namespace kcol {

namespace {

std::string arc_text(vertex u, vertex v)
{
    return std::to_string(u) + "->" + std::to_string(v);
}

bool absorbs(const ab_digraph& d, const std::vector<char>& within, const std::vector<char>& kernel)
{
    for (vertex v = 0; v < d.vertex_count(); ++v) {
        if (!within[v])
            continue;
        if (kernel[v]) {
            for (vertex w : d.underlying().neighbors(v))
                if (kernel[w])
                    return false;
            continue;
        }
        auto out = d.arcs().out_neighbors(v);
        if (std::none_of(out.begin(), out.end(), [&](vertex w) { return kernel[w] != 0; }))
            return false;
    }
    return true;
}

} // namespace

ab_digraph make_ab_digraph(digraph arcs, const vertex_set& a)
{
    const int n = arcs.vertex_count();
    if (a.ambient_size() != n)
        throw input_error("A-side ambient size does not match digraph order");
    ab_digraph out;
    out.in_a_ = a.indicator();
    for (vertex u = 0; u < n; ++u)
        for (vertex v : arcs.out_neighbors(u)) {
            const bool au = out.in_a_[u];
            const bool av = out.in_a_[v];
            if (au && av)
                throw input_error("arc " + arc_text(u, v) + " lies inside the independent side");
            if (!au && !av && !arcs.has_arc(v, u))
                throw input_error("edge inside B is not bidirected at arc " + arc_text(u, v));
            if (au != av && arcs.has_arc(v, u))
                throw input_error("cross edge " + arc_text(u, v) + " is oriented both ways");
        }
    out.in_arcs_ = arcs.reversed();
    out.underlying_ = arcs.underlying();
    out.arcs_ = std::move(arcs);
    out.a_ = a;
    return out;
}

ab_digraph build_ab_digraph(const graph& g, const vertex_set& a, const head_map& cross_heads)
{
    const int n = g.vertex_count();
    if (a.ambient_size() != n)
        throw input_error("A-side ambient size does not match graph order");
    if (!is_independent(g, a))
        throw input_error("A-side is not independent");
    const auto in_a = a.indicator();
    std::vector<edge> arcs;
    std::size_t used = 0;
    for (const auto& e : g.edges()) {
        if (!in_a[e.u] && !in_a[e.v]) {
            arcs.push_back({e.u, e.v});
            arcs.push_back({e.v, e.u});
            continue;
        }
        auto it = cross_heads.find(e);
        if (it == cross_heads.end())
            throw input_error("no head given for cross edge " + std::to_string(e.u) + "-"
                              + std::to_string(e.v));
        if (it->second == e.v)
            arcs.push_back({e.u, e.v});
        else if (it->second == e.u)
            arcs.push_back({e.v, e.u});
        else
            throw input_error("head " + std::to_string(it->second) + " is not an endpoint of "
                              + std::to_string(e.u) + "-" + std::to_string(e.v));
        ++used;
    }
    if (used != cross_heads.size())
        throw input_error("head map names pairs that are not cross edges");
    return make_ab_digraph(digraph::from_arcs(n, arcs), a);
}

vertex_set find_kernel_ab(const ab_digraph& d) { return find_kernel_ab(d, vertex_set::all(d.vertex_count())); }

vertex_set find_kernel_ab(const ab_digraph& d, const vertex_set& within)
{
    const int n = d.vertex_count();
    if (within.ambient_size() != n)
        throw input_error("vertex subset ambient size does not match digraph order");
    auto alive = within.indicator();
    // For live B-vertices: number of out-arcs into the live A-part.
    std::vector<int> into_a(static_cast<std::size_t>(n), 0);
    std::priority_queue<vertex, std::vector<vertex>, std::greater<>> free_b;
    for (vertex v : within) {
        if (d.in_a(v))
            continue;
        for (vertex w : d.arcs().out_neighbors(v))
            if (alive[w] && d.in_a(w))
                ++into_a[v];
        if (into_a[v] == 0)
            free_b.push(v);
    }

    auto drop = [&](vertex u) {
        alive[u] = 0;
        if (!d.in_a(u))
            return;
        for (vertex w : d.in_arcs().out_neighbors(u))
            if (alive[w] && --into_a[w] == 0)
                free_b.push(w);
    };

    std::vector<char> kernel(static_cast<std::size_t>(n), 0);
    while (!free_b.empty()) {
        const vertex v = free_b.top();
        free_b.pop();
        if (!alive[v])
            continue;
        kernel[v] = 1;
        drop(v);
        for (vertex w : d.underlying().neighbors(v))
            if (alive[w])
                drop(w);
    }
    // Every live B-vertex now has an arc into the live A-part.
    for (vertex v : within)
        if (alive[v] && d.in_a(v))
            kernel[v] = 1;

    if (!absorbs(d, within.indicator(), kernel))
        throw invariant_violation("kernel search returned a set that is not a kernel");
    return vertex_set::from_indicator(kernel);
}

coloring kernel_lemma_color(const ab_digraph& d, const list_assignment& lists)
{
    const int n = d.vertex_count();
    if (lists.size() != n)
        throw input_error("list assignment size does not match digraph order");
    std::vector<int> out_live(static_cast<std::size_t>(n));
    for (vertex v = 0; v < n; ++v) {
        out_live[v] = d.arcs().out_degree(v);
        if (lists.list_size(v) < out_live[v] + 1)
            throw input_error("vertex " + std::to_string(v) + " has " + std::to_string(lists.list_size(v))
                              + " colors but out-degree " + std::to_string(out_live[v]));
    }

    // Lists are sorted and colors are consumed in ascending order, so each
    // list shrinks from the front.
    std::vector<std::size_t> front(static_cast<std::size_t>(n), 0);
    auto remaining = [&](vertex v) { return lists.list_size(v) - static_cast<int>(front[v]); };
    coloring col(n);
    int uncolored = n;
    while (uncolored > 0) {
        int c = -1;
        for (vertex v = 0; v < n; ++v)
            if (!col.is_colored(v) && remaining(v) > 0) {
                const int head = lists[v][front[v]];
                if (c < 0 || head < c)
                    c = head;
            }
        if (c < 0)
            throw invariant_violation("uncolored vertices ran out of list colors");

        std::vector<vertex> holders;
        for (vertex v = 0; v < n; ++v)
            if (!col.is_colored(v) && remaining(v) > 0 && lists[v][front[v]] == c)
                holders.push_back(v);
        const auto kernel = find_kernel_ab(d, vertex_set(n, std::move(holders)));
        for (vertex u : kernel) {
            col.assign(u, c);
            --uncolored;
            for (vertex w : d.in_arcs().out_neighbors(u))
                --out_live[w];
        }
        for (vertex v = 0; v < n; ++v)
            if (!col.is_colored(v) && remaining(v) > 0 && lists[v][front[v]] == c)
                ++front[v];
        for (vertex v = 0; v < n; ++v)
            if (!col.is_colored(v) && remaining(v) < out_live[v] + 1)
                throw invariant_violation("vertex " + std::to_string(v)
                                          + " lost more list colors than out-neighbors");
    }
    return col;
}

vertex_set painter_move(const ab_digraph& d, const vertex_set& revealed)
{
    if (revealed.empty())
        throw input_error("painter_move: Lister must reveal at least one vertex");
    return find_kernel_ab(d, revealed);
}

} // namespace kcol
