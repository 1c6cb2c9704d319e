#include "kcol/brooks.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <string>

#include "kcol/errors.hpp"
#include "peel.hpp"

namespace kcol {

namespace {

using sink = std::function<void(coloring)>;
using graph_ptr = std::shared_ptr<const graph>;
using id_map = std::shared_ptr<const std::vector<vertex>>;

// Connected, max degree <= 2: alternate 0/1 along the path or cycle, and give
// the closing vertex of an odd cycle color 2.
void color_path_or_cycle(const graph& h, coloring& out)
{
    const int n = h.vertex_count();
    vertex start = 0;
    for (vertex v = 0; v < n; ++v)
        if (h.degree(v) <= 1) {
            start = v;
            break;
        }
    const bool cycle = h.min_degree() == 2;
    vertex prev = -1;
    vertex cur = start;
    for (int step = 0; step < n; ++step) {
        out.assign(cur, step % 2);
        vertex next = -1;
        for (vertex w : h.neighbors(cur))
            if (w != prev && !out.is_colored(w)) {
                next = w;
                break;
            }
        prev = cur;
        cur = next;
    }
    if (cycle && n % 2 == 1)
        out.assign(prev, 2);
}

void color_rainbow(const graph& h, coloring& out)
{
    for (vertex v = 0; v < h.vertex_count(); ++v)
        out.assign(v, v);
}

int smallest_free(const graph& g, vertex v, const coloring& col, int limit)
{
    std::vector<char> used(static_cast<std::size_t>(limit), 0);
    for (vertex w : g.neighbors(v))
        if (col.is_colored(w) && col[w] < limit)
            used[col[w]] = 1;
    for (int c = 0; c < limit; ++c)
        if (!used[c])
            return c;
    return -1;
}

id_map share(std::vector<vertex> ids) { return std::make_shared<const std::vector<vertex>>(std::move(ids)); }

void lift(const coloring& local, const std::vector<vertex>& to_parent, coloring& parent)
{
    for (std::size_t i = 0; i < to_parent.size(); ++i)
        parent.assign(to_parent[i], local[static_cast<vertex>(i)]);
}

// Explicit work stack. A task colors one graph and hands the result to its
// continuation; continuations are posted as tasks of their own so neither the
// reductions nor the unwinding nest native calls.
class brooks_solver {
public:
    explicit brooks_solver(brooks_trace* trace) : trace_(trace) {}

    coloring run(const graph& g)
    {
        coloring result;
        solve(std::make_shared<const graph>(g), [&result](coloring c) { result = std::move(c); });
        while (!tasks_.empty()) {
            auto task = std::move(tasks_.back());
            tasks_.pop_back();
            task();
        }
        return result;
    }

private:
    struct job {
        graph_ptr g;
        coloring col;
        std::vector<detail::peeled_vertex> order;
        int pending = 1;
        sink done;
    };

    void post(std::function<void()> task) { tasks_.push_back(std::move(task)); }

    void solve(graph_ptr g, sink done)
    {
        post([this, g = std::move(g), done = std::move(done)] { start(g, done); });
    }

    void deliver(const sink& done, coloring c)
    {
        post([done, c = std::move(c)] { done(c); });
    }

    void count(int brooks_trace::*field, int by = 1)
    {
        if (trace_)
            trace_->*field += by;
    }

    void start(const graph_ptr& g, const sink& done);
    void settle(const std::shared_ptr<job>& j);
    void color_hitting(const graph_ptr& x, const sink& done);
    void color_cubic(const graph_ptr& x, const sink& done);

    brooks_trace* trace_;
    std::vector<std::function<void()>> tasks_;
};

void brooks_solver::start(const graph_ptr& g, const sink& done)
{
    const int n = g->vertex_count();
    auto peel = detail::peel_to_base(*g);
    auto j = std::make_shared<job>();
    j->g = g;
    j->col = coloring(n);
    j->order = std::move(peel.order);
    j->done = done;
    count(&brooks_trace::peeled, static_cast<int>(j->order.size()));

    for (auto& base : peel.bases) {
        auto view = induced_subgraph(*g, vertex_set(n, std::move(base.vertices)));
        switch (base.kind) {
        case detail::base_kind::small_degree: {
            count(&brooks_trace::small_degree);
            coloring local(view.local.vertex_count());
            color_path_or_cycle(view.local, local);
            lift(local, view.to_parent, j->col);
            break;
        }
        case detail::base_kind::complete: {
            count(&brooks_trace::complete);
            coloring local(view.local.vertex_count());
            color_rainbow(view.local, local);
            lift(local, view.to_parent, j->col);
            break;
        }
        case detail::base_kind::regular: {
            ++j->pending;
            auto to_parent = share(std::move(view.to_parent));
            sink back = [this, j, to_parent](coloring c) {
                lift(c, *to_parent, j->col);
                settle(j);
            };
            auto x = std::make_shared<const graph>(std::move(view.local));
            if (base.max_degree == 3)
                color_cubic(x, back);
            else
                color_hitting(x, back);
            break;
        }
        }
    }
    settle(j);
}

void brooks_solver::settle(const std::shared_ptr<job>& j)
{
    if (--j->pending > 0)
        return;
    for (auto it = j->order.rbegin(); it != j->order.rend(); ++it) {
        const int limit = std::max(3, it->component_max_degree);
        const int c = smallest_free(*j->g, it->v, j->col, limit);
        if (c < 0)
            throw invariant_violation("re-inserting vertex " + std::to_string(it->v)
                                      + " found no free color below " + std::to_string(limit));
        j->col.assign(it->v, c);
    }
    deliver(j->done, std::move(j->col));
}

void brooks_solver::color_hitting(const graph_ptr& x, const sink& done)
{
    count(&brooks_trace::hitting_class);
    const int n = x->vertex_count();
    const int delta = x->max_degree();
    const vertex v = 0;
    auto minus_v = induced_subgraph(*x, vertex_set(n, {v}).complement());
    auto to_parent = share(std::move(minus_v.to_parent));

    solve(std::make_shared<const graph>(std::move(minus_v.local)),
          [this, x, n, delta, v, to_parent, done](coloring c) {
              coloring partial(n);
              lift(c, *to_parent, partial);
              const int hit = find_hitting_color(*x, v, partial);

              std::vector<vertex> cls;
              for (vertex u = 0; u < n; ++u)
                  if (partial[u] == hit)
                      cls.push_back(u);
              const auto m = expand_to_maximal_independent(*x, vertex_set(n, std::move(cls)));
              auto rest = induced_subgraph(*x, m.complement());
              if (rest.local.max_degree() > delta - 1)
                  throw invariant_violation("removing the hitting class left maximum degree "
                                            + std::to_string(rest.local.max_degree()));
              if (!enumerate_cliques(rest.local, delta).empty())
                  throw invariant_violation("removing the hitting class left a clique of size "
                                            + std::to_string(delta));
              auto rest_parent = share(std::move(rest.to_parent));

              solve(std::make_shared<const graph>(std::move(rest.local)),
                    [this, n, m, rest_parent, done](coloring c2) {
                        coloring col(n);
                        lift(c2, *rest_parent, col);
                        const int fresh = c2.max_color() + 1;
                        for (vertex u : m)
                            col.assign(u, fresh);
                        deliver(done, std::move(col));
                    });
          });
}

void brooks_solver::color_cubic(const graph_ptr& x, const sink& done)
{
    const int n = x->vertex_count();
    if (auto dia = find_diamond(*x)) {
        count(&brooks_trace::diamond);
        auto rest = induced_subgraph(*x, vertex_set(n, {dia->a, dia->b, dia->c, dia->d}).complement());
        auto to_parent = share(std::move(rest.to_parent));
        solve(std::make_shared<const graph>(std::move(rest.local)),
              [this, x, n, dd = *dia, to_parent, done](coloring c) {
                  coloring partial(n);
                  lift(c, *to_parent, partial);
                  deliver(done, extend_diamond_coloring(*x, dd, partial));
              });
        return;
    }

    count(&brooks_trace::cycle_surgery);
    auto found = find_shortest_cycle(*x);
    if (!found)
        throw invariant_violation("cubic component has no cycle");
    auto cycle = share(std::move(*found));
    std::vector<char> on_cycle(static_cast<std::size_t>(n), 0);
    for (vertex u : *cycle)
        on_cycle[u] = 1;
    std::vector<vertex> attach;
    for (vertex u : *cycle)
        for (vertex w : x->neighbors(u))
            if (!on_cycle[w])
                attach.push_back(w);
    std::sort(attach.begin(), attach.end());
    attach.erase(std::unique(attach.begin(), attach.end()), attach.end());
    if (attach.size() < 2)
        throw invariant_violation("induced cycle has fewer than two outside neighbors");

    auto rest = induced_subgraph(*x, vertex_set(n, *cycle).complement());
    const auto local = rest.from_parent(n);
    const vertex lx = local[attach[0]];
    const vertex ly = local[attach[1]];
    graph h = std::move(rest.local);
    if (!h.adjacent(lx, ly)) {
        auto es = h.edges();
        es.push_back({lx, ly});
        h = graph::from_edges(h.vertex_count(), es);
    }
    if (h.max_degree() > 3)
        throw invariant_violation("cycle surgery produced maximum degree above 3");
    if (!enumerate_cliques(h, 4).empty())
        throw invariant_violation("cycle surgery produced a K4");
    auto to_parent = share(std::move(rest.to_parent));

    solve(std::make_shared<const graph>(std::move(h)),
          [this, x, n, cycle, on_cycle, to_parent, lx, ly, done](coloring c) {
              if (c[lx] == c[ly])
                  throw invariant_violation("attachments of the removed cycle share a color");
              coloring col(n);
              lift(c, *to_parent, col);
              std::vector<std::vector<int>> lists(static_cast<std::size_t>(n));
              for (vertex u : *cycle) {
                  int outside = -1;
                  for (vertex w : x->neighbors(u))
                      if (!on_cycle[w])
                          outside = col[w];
                  if (outside < 0 || outside > 2)
                      throw invariant_violation("cycle vertex without a 3-colored outside neighbor");
                  for (int k = 0; k < 3; ++k)
                      if (k != outside)
                          lists[u].push_back(k);
              }
              const auto around = extend_cycle_coloring(*cycle, list_assignment(std::move(lists)));
              for (vertex u : *cycle)
                  col.assign(u, around[u]);
              deliver(done, std::move(col));
          });
}

} // namespace

int color_bound(const graph& connected)
{
    const int delta = connected.max_degree();
    int bound = std::max(3, delta);
    if (connected.vertex_count() == delta + 1 && is_complete(connected))
        bound = std::max(bound, delta + 1);
    return bound;
}

std::vector<int> component_bounds(const graph& g)
{
    std::vector<int> out(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& comp : components(g)) {
        const int b = color_bound(induced_subgraph(g, comp).local);
        for (vertex v : comp)
            out[v] = b;
    }
    return out;
}

coloring brooks_color(const graph& g, brooks_trace* trace)
{
    auto col = brooks_solver(trace).run(g);
    if (!col.total() || !is_proper(g, col))
        throw invariant_violation("Brooks coloring is not a proper total coloring");
    for (const auto& comp : components(g)) {
        const int bound = color_bound(induced_subgraph(g, comp).local);
        if (colors_on(col, comp.members()) > bound)
            throw invariant_violation("component of vertex " + std::to_string(comp[0])
                                      + " used more than " + std::to_string(bound) + " colors");
    }
    col.compact();
    return col;
}

int find_hitting_color(const graph& x, vertex v, const coloring& partial)
{
    const int n = x.vertex_count();
    const int delta = x.max_degree();
    if (delta < 4 || !is_regular(x))
        throw input_error("find_hitting_color needs a regular graph of degree >= 4");
    for (const auto& comp : components(x))
        if (comp.size() == delta + 1)
            throw input_error("find_hitting_color: graph contains a clique on degree + 1 vertices");
    if (v < 0 || v >= n || partial.size() != n)
        throw input_error("find_hitting_color: vertex or coloring size out of range");
    if (partial.is_colored(v))
        throw input_error("find_hitting_color: vertex " + std::to_string(v) + " must be uncolored");
    for (vertex u = 0; u < n; ++u)
        if (u != v && (!partial.is_colored(u) || partial[u] >= delta))
            throw input_error("find_hitting_color: vertex " + std::to_string(u)
                              + " lacks a color below " + std::to_string(delta));
    if (!is_proper(x, partial))
        throw input_error("find_hitting_color: partial coloring is not proper");

    const auto cliques = enumerate_cliques(x, delta);
    for (int c = 0; c < delta; ++c) {
        const bool hits_all = std::all_of(cliques.begin(), cliques.end(), [&](const auto& q) {
            return std::any_of(q.begin(), q.end(), [&](vertex u) { return partial[u] == c; });
        });
        if (hits_all)
            return c;
    }
    throw invariant_violation("no color class meets every clique of size " + std::to_string(delta));
}

vertex_set expand_to_maximal_independent(const graph& g, const vertex_set& s)
{
    if (s.ambient_size() != g.vertex_count())
        throw input_error("vertex set ambient size does not match graph order");
    if (!is_independent(g, s))
        throw input_error("expand_to_maximal_independent: seed set is not independent");
    auto in = s.indicator();
    std::vector<char> blocked(in.size(), 0);
    for (vertex v : s)
        for (vertex w : g.neighbors(v))
            blocked[w] = 1;
    for (vertex v = 0; v < g.vertex_count(); ++v) {
        if (in[v] || blocked[v])
            continue;
        in[v] = 1;
        for (vertex w : g.neighbors(v))
            blocked[w] = 1;
    }
    return vertex_set::from_indicator(in);
}

coloring extend_diamond_coloring(const graph& g, const diamond& d, const coloring& partial)
{
    const int n = g.vertex_count();
    const vertex quad[4] = {d.a, d.b, d.c, d.d};
    for (vertex v : quad)
        if (v < 0 || v >= n)
            throw input_error("diamond vertex out of range");
    if (vertex_set(n, {d.a, d.b, d.c, d.d}).size() != 4)
        throw input_error("diamond vertices are not distinct");
    if (g.adjacent(d.a, d.b) || !g.adjacent(d.a, d.c) || !g.adjacent(d.a, d.d)
        || !g.adjacent(d.b, d.c) || !g.adjacent(d.b, d.d) || !g.adjacent(d.c, d.d))
        throw input_error("vertices do not induce a diamond with ab missing");
    if (g.degree(d.c) != 3 || g.degree(d.d) != 3 || g.degree(d.a) > 3 || g.degree(d.b) > 3)
        throw input_error("diamond is not in cubic position");
    if (partial.size() != n)
        throw input_error("coloring size does not match graph order");

    std::vector<char> in_d(static_cast<std::size_t>(n), 0);
    for (vertex v : quad)
        in_d[v] = 1;
    for (vertex v = 0; v < n; ++v) {
        if (in_d[v])
            continue;
        if (!partial.is_colored(v) || partial[v] > 2)
            throw input_error("partial coloring does not 3-color vertex " + std::to_string(v));
        for (vertex w : g.neighbors(v))
            if (!in_d[w] && partial[w] == partial[v])
                throw input_error("partial coloring is not proper outside the diamond");
    }

    std::vector<char> blocked(3, 0);
    for (vertex end : {d.a, d.b})
        for (vertex w : g.neighbors(end))
            if (!in_d[w])
                blocked[partial[w]] = 1;
    int shared = 0;
    while (shared < 3 && blocked[shared])
        ++shared;
    if (shared == 3)
        throw invariant_violation("no common color for the diamond's non-adjacent pair");
    const int for_c = shared == 0 ? 1 : 0;
    int for_d = 0;
    while (for_d == shared || for_d == for_c)
        ++for_d;

    coloring out = partial;
    out.assign(d.a, shared);
    out.assign(d.b, shared);
    out.assign(d.c, for_c);
    out.assign(d.d, for_d);
    if (!is_proper(g, out))
        throw invariant_violation("diamond extension is not proper");
    return out;
}

coloring extend_cycle_coloring(std::span<const vertex> cycle, const list_assignment& lists)
{
    const int len = static_cast<int>(cycle.size());
    const int n = lists.size();
    if (len < 3)
        throw input_error("cycle must have at least 3 vertices");
    for (vertex u : cycle) {
        if (u < 0 || u >= n)
            throw input_error("cycle vertex " + std::to_string(u) + " has no list");
        if (lists.list_size(u) != 2)
            throw input_error("cycle vertex " + std::to_string(u) + " needs a list of exactly 2 colors");
    }
    if (vertex_set(n, std::vector<vertex>(cycle.begin(), cycle.end())).size() != len)
        throw input_error("cycle repeats a vertex");

    auto same = [&](vertex p, vertex q) {
        return std::equal(lists[p].begin(), lists[p].end(), lists[q].begin(), lists[q].end());
    };
    int start = -1;
    for (int i = 0; i < len; ++i)
        if (!same(cycle[i], cycle[(i + 1) % len])) {
            start = i;
            break;
        }
    if (start < 0)
        throw input_error("all cycle lists are identical");

    const vertex u = cycle[start];
    const vertex w = cycle[(start + 1) % len];
    coloring out(n);
    for (int c : lists[u])
        if (!lists.contains(w, c)) {
            out.assign(u, c);
            break;
        }
    // Walk away from w; w itself is colored last.
    for (int k = 1; k < len; ++k) {
        const vertex cur = cycle[((start - k) % len + len) % len];
        const vertex prev = cycle[((start - k + 1) % len + len) % len];
        bool placed = false;
        for (int c : lists[cur])
            if (c != out[prev] && (cur != w || c != out[u])) {
                out.assign(cur, c);
                placed = true;
                break;
            }
        if (!placed)
            throw invariant_violation("cycle extension ran out of colors at vertex " + std::to_string(cur));
    }
    return out;
}

} // namespace kcol
