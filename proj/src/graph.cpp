#include "kcol/graph.hpp"

#include <algorithm>
#include <string>

#include "kcol/errors.hpp"

namespace kcol {

namespace {

std::string pair_text(edge e)
{
    return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")";
}

void check_id(int n, vertex v, edge e)
{
    if (v < 0 || v >= n)
        throw input_error("vertex id out of range [0, " + std::to_string(n) + ") in pair "
                          + pair_text(e));
}

// Packs sorted (source, target) pairs into CSR arrays.
void fill_csr(int n, const std::vector<edge>& sorted, std::vector<int>& offsets,
              std::vector<vertex>& targets)
{
    offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    targets.clear();
    targets.reserve(sorted.size());
    for (const auto& e : sorted) {
        ++offsets[static_cast<std::size_t>(e.u) + 1];
        targets.push_back(e.v);
    }
    for (int v = 0; v < n; ++v)
        offsets[v + 1] += offsets[v];
}

} // namespace

// --- vertex_set ---

vertex_set::vertex_set(int ambient_size) : ambient_(ambient_size)
{
    if (ambient_size < 0)
        throw input_error("negative ambient size");
}

vertex_set::vertex_set(int ambient_size, std::vector<vertex> members)
    : ambient_(ambient_size), members_(std::move(members))
{
    if (ambient_size < 0)
        throw input_error("negative ambient size");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && (members_.front() < 0 || members_.back() >= ambient_))
        throw input_error("vertex set member outside [0, " + std::to_string(ambient_) + ")");
}

vertex_set vertex_set::all(int ambient_size)
{
    std::vector<vertex> m(static_cast<std::size_t>(ambient_size));
    for (int v = 0; v < ambient_size; ++v)
        m[v] = v;
    vertex_set s(ambient_size);
    s.members_ = std::move(m);
    return s;
}

vertex_set vertex_set::from_indicator(std::span<const char> indicator)
{
    vertex_set s(static_cast<int>(indicator.size()));
    for (std::size_t v = 0; v < indicator.size(); ++v)
        if (indicator[v])
            s.members_.push_back(static_cast<vertex>(v));
    return s;
}

bool vertex_set::contains(vertex v) const
{
    return std::binary_search(members_.begin(), members_.end(), v);
}

vertex_set vertex_set::complement() const
{
    vertex_set out(ambient_);
    auto it = members_.begin();
    for (vertex v = 0; v < ambient_; ++v) {
        if (it != members_.end() && *it == v)
            ++it;
        else
            out.members_.push_back(v);
    }
    return out;
}

std::vector<char> vertex_set::indicator() const
{
    std::vector<char> mask(static_cast<std::size_t>(ambient_), 0);
    for (vertex v : members_)
        mask[v] = 1;
    return mask;
}

// --- graph ---

graph::graph(int n)
{
    if (n < 0)
        throw input_error("negative vertex count");
    offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
}

graph graph::from_edges(int n, std::span<const edge> edges)
{
    if (n < 0)
        throw input_error("negative vertex count");
    std::vector<edge> both;
    both.reserve(edges.size() * 2);
    for (const auto& e : edges) {
        check_id(n, e.u, e);
        check_id(n, e.v, e);
        if (e.u == e.v)
            throw input_error("self-loop " + pair_text(e));
        both.push_back({e.u, e.v});
        both.push_back({e.v, e.u});
    }
    std::sort(both.begin(), both.end());
    both.erase(std::unique(both.begin(), both.end()), both.end());
    graph g;
    fill_csr(n, both, g.offsets_, g.targets_);
    return g;
}

int graph::max_degree() const
{
    int best = 0;
    for (vertex v = 0; v < vertex_count(); ++v)
        best = std::max(best, degree(v));
    return best;
}

int graph::min_degree() const
{
    if (vertex_count() == 0)
        return 0;
    int best = degree(0);
    for (vertex v = 1; v < vertex_count(); ++v)
        best = std::min(best, degree(v));
    return best;
}

bool graph::adjacent(vertex u, vertex v) const
{
    if (degree(u) > degree(v))
        std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<edge> graph::edges() const
{
    std::vector<edge> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for (vertex u = 0; u < vertex_count(); ++u)
        for (vertex v : neighbors(u))
            if (u < v)
                out.push_back({u, v});
    return out;
}

graph build_graph(int n, std::span<const edge> edges) { return graph::from_edges(n, edges); }

graph build_graph(int n, std::initializer_list<edge> edges)
{
    return graph::from_edges(n, std::span<const edge>(edges.begin(), edges.size()));
}

// --- digraph ---

digraph::digraph(int n)
{
    if (n < 0)
        throw input_error("negative vertex count");
    offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
}

digraph digraph::from_arcs(int n, std::span<const edge> arcs)
{
    if (n < 0)
        throw input_error("negative vertex count");
    std::vector<edge> sorted;
    sorted.reserve(arcs.size());
    for (const auto& a : arcs) {
        check_id(n, a.u, a);
        check_id(n, a.v, a);
        if (a.u == a.v)
            throw input_error("self-loop arc " + pair_text(a));
        sorted.push_back(a);
    }
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    digraph d;
    fill_csr(n, sorted, d.offsets_, d.targets_);
    return d;
}

bool digraph::has_arc(vertex from, vertex to) const
{
    auto out = out_neighbors(from);
    return std::binary_search(out.begin(), out.end(), to);
}

std::vector<edge> digraph::arcs() const
{
    std::vector<edge> out;
    out.reserve(targets_.size());
    for (vertex u = 0; u < vertex_count(); ++u)
        for (vertex v : out_neighbors(u))
            out.push_back({u, v});
    return out;
}

digraph digraph::reversed() const
{
    std::vector<edge> rev;
    rev.reserve(targets_.size());
    for (vertex u = 0; u < vertex_count(); ++u)
        for (vertex v : out_neighbors(u))
            rev.push_back({v, u});
    std::sort(rev.begin(), rev.end());
    digraph d;
    fill_csr(vertex_count(), rev, d.offsets_, d.targets_);
    return d;
}

graph digraph::underlying() const { return graph::from_edges(vertex_count(), arcs()); }

// --- induced subgraphs ---

std::vector<vertex> subgraph_view::from_parent(int parent_size) const
{
    std::vector<vertex> map(static_cast<std::size_t>(parent_size), -1);
    for (std::size_t i = 0; i < to_parent.size(); ++i)
        map[to_parent[i]] = static_cast<vertex>(i);
    return map;
}

subgraph_view induced_subgraph(const graph& g, const vertex_set& s)
{
    if (s.ambient_size() != g.vertex_count())
        throw input_error("vertex set ambient size does not match graph order");
    subgraph_view view;
    view.to_parent.assign(s.begin(), s.end());
    const auto local = view.from_parent(g.vertex_count());
    std::vector<edge> es;
    for (std::size_t i = 0; i < view.to_parent.size(); ++i)
        for (vertex w : g.neighbors(view.to_parent[i]))
            if (local[w] > static_cast<vertex>(i))
                es.push_back({static_cast<vertex>(i), local[w]});
    view.local = graph::from_edges(s.size(), es);
    return view;
}

digraph induced_subdigraph(const digraph& d, const vertex_set& s)
{
    if (s.ambient_size() != d.vertex_count())
        throw input_error("vertex set ambient size does not match digraph order");
    std::vector<vertex> local(static_cast<std::size_t>(d.vertex_count()), -1);
    for (int i = 0; i < s.size(); ++i)
        local[s[i]] = i;
    std::vector<edge> arcs;
    for (int i = 0; i < s.size(); ++i)
        for (vertex w : d.out_neighbors(s[i]))
            if (local[w] >= 0)
                arcs.push_back({i, local[w]});
    return digraph::from_arcs(s.size(), arcs);
}

std::vector<vertex_set> components(const graph& g)
{
    const int n = g.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<vertex_set> out;
    std::vector<vertex> queue;
    for (vertex root = 0; root < n; ++root) {
        if (seen[root])
            continue;
        queue.assign(1, root);
        seen[root] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (vertex w : g.neighbors(queue[head]))
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        out.emplace_back(n, queue);
    }
    return out;
}

cross_edges edges_between(const graph& g, const vertex_set& s, const vertex_set& t)
{
    if (s.ambient_size() != g.vertex_count() || t.ambient_size() != g.vertex_count())
        throw input_error("vertex set ambient size does not match graph order");
    const auto in_t = t.indicator();
    for (vertex v : s)
        if (in_t[v])
            throw input_error("edges_between: sets overlap at vertex " + std::to_string(v));
    cross_edges out;
    for (vertex v : s)
        for (vertex w : g.neighbors(v))
            if (in_t[w])
                out.pairs.push_back({v, w});
    out.count = static_cast<int>(out.pairs.size());
    return out;
}

bool is_independent(const graph& g, const vertex_set& s)
{
    const auto in_s = s.indicator();
    for (vertex v : s)
        for (vertex w : g.neighbors(v))
            if (in_s[w])
                return false;
    return true;
}

bool is_regular(const graph& g) { return g.max_degree() == g.min_degree(); }

bool is_complete(const graph& g)
{
    const long long n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

} // namespace kcol
