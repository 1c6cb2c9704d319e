#include "kcol/search.hpp"

#include <algorithm>
#include <climits>
#include <string>

#include "kcol/errors.hpp"

namespace kcol {

namespace {

bool chordless(const graph& g, const std::vector<vertex>& cycle)
{
    const std::size_t len = cycle.size();
    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = i + 2; j < len; ++j) {
            if (i == 0 && j == len - 1)
                continue;
            if (g.adjacent(cycle[i], cycle[j]))
                return false;
        }
    return true;
}

std::vector<vertex> sorted_intersection(std::span<const vertex> a, std::span<const vertex> b)
{
    std::vector<vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

class clique_search {
public:
    clique_search(const graph& g, int t, int cap) : g_(g), t_(t), cap_(cap) {}

    std::vector<std::vector<vertex>> run()
    {
        std::vector<vertex> eligible;
        for (vertex v = 0; v < g_.vertex_count(); ++v)
            if (g_.degree(v) >= t_ - 1)
                eligible.push_back(v);
        extend(eligible);
        return std::move(found_);
    }

private:
    void extend(const std::vector<vertex>& candidates)
    {
        if (static_cast<int>(current_.size()) == t_) {
            if (static_cast<int>(found_.size()) == cap_)
                throw resource_error("clique enumeration exceeded cap of " + std::to_string(cap_)
                                     + " results");
            found_.push_back(current_);
            return;
        }
        const std::size_t missing = static_cast<std::size_t>(t_) - current_.size();
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (candidates.size() - i < missing)
                break;
            const vertex v = candidates[i];
            std::vector<vertex> next;
            for (std::size_t j = i + 1; j < candidates.size(); ++j)
                if (g_.adjacent(v, candidates[j]))
                    next.push_back(candidates[j]);
            current_.push_back(v);
            extend(next);
            current_.pop_back();
        }
    }

    const graph& g_;
    int t_;
    int cap_;
    std::vector<vertex> current_;
    std::vector<std::vector<vertex>> found_;
};

} // namespace

std::optional<std::vector<vertex>> find_shortest_cycle(const graph& g)
{
    const int n = g.vertex_count();
    int best = INT_MAX;
    std::vector<vertex> best_cycle;
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<vertex> queue;

    for (vertex root = 0; root < n && best > 3; ++root) {
        for (vertex v : queue)
            dist[v] = -1;
        queue.assign(1, root);
        dist[root] = 0;
        parent[root] = -1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const vertex u = queue[head];
            // Any cycle closed at u or deeper has length >= 2 * dist[u].
            if (2 * dist[u] >= best)
                break;
            for (vertex w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u]) {
                    const int len = dist[u] + dist[w] + 1;
                    if (len >= best)
                        continue;
                    best = len;
                    best_cycle.clear();
                    for (vertex x = u; x >= 0; x = parent[x])
                        best_cycle.push_back(x);
                    std::reverse(best_cycle.begin(), best_cycle.end());
                    for (vertex x = w; x != root; x = parent[x])
                        best_cycle.push_back(x);
                }
            }
        }
    }
    if (best == INT_MAX)
        return std::nullopt;
    if (static_cast<int>(best_cycle.size()) != best || !chordless(g, best_cycle))
        throw invariant_violation("shortest cycle search produced a non-induced cycle");
    return best_cycle;
}

std::optional<diamond> find_diamond(const graph& g)
{
    for (vertex c = 0; c < g.vertex_count(); ++c)
        for (vertex d : g.neighbors(c)) {
            if (d < c)
                continue;
            const auto common = sorted_intersection(g.neighbors(c), g.neighbors(d));
            for (std::size_t i = 0; i < common.size(); ++i)
                for (std::size_t j = i + 1; j < common.size(); ++j)
                    if (!g.adjacent(common[i], common[j]))
                        return diamond{common[i], common[j], c, d};
        }
    return std::nullopt;
}

std::vector<std::vector<vertex>> enumerate_cliques(const graph& g, int t, int cap)
{
    if (t < 1)
        throw input_error("clique size must be at least 1");
    if (cap < 1)
        throw input_error("clique cap must be at least 1");
    return clique_search(g, t, cap).run();
}

} // namespace kcol
