#include "peel.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace kcol::detail {

peel_result peel_to_base(const graph& g)
{
    const int n = g.vertex_count();
    peel_result out;
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    std::vector<char> queued(static_cast<std::size_t>(n), 0);
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (vertex v = 0; v < n; ++v)
        deg[v] = g.degree(v);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<vertex> queue;

    for (const auto& comp : components(g)) {
        int hi = 0;
        int lo = n;
        for (vertex v : comp) {
            hi = std::max(hi, deg[v]);
            lo = std::min(lo, deg[v]);
        }
        if (hi <= 2 || hi == lo) {
            const auto kind = hi <= 2                                   ? base_kind::small_degree
                              : static_cast<int>(comp.size()) == hi + 1 ? base_kind::complete
                                                                        : base_kind::regular;
            out.bases.push_back({std::vector<vertex>(comp.begin(), comp.end()), hi, kind});
            continue;
        }

        // Cascade: removing a vertex can only push its neighbors below hi, so
        // one heap of candidates per component suffices.
        std::priority_queue<vertex, std::vector<vertex>, std::greater<>> below;
        for (vertex v : comp)
            if (deg[v] < hi) {
                below.push(v);
                queued[v] = 1;
            }
        while (!below.empty()) {
            const vertex v = below.top();
            below.pop();
            alive[v] = 0;
            out.order.push_back({v, hi});
            for (vertex w : g.neighbors(v))
                if (alive[w] && --deg[w] < hi && !queued[w]) {
                    queued[w] = 1;
                    below.push(w);
                }
        }

        // Survivors all have degree hi; each piece is hi-regular.
        for (vertex root : comp) {
            if (!alive[root] || seen[root])
                continue;
            seen[root] = 1;
            queue.assign(1, root);
            for (std::size_t head = 0; head < queue.size(); ++head)
                for (vertex w : g.neighbors(queue[head]))
                    if (alive[w] && !seen[w]) {
                        seen[w] = 1;
                        queue.push_back(w);
                    }
            std::sort(queue.begin(), queue.end());
            const auto kind = static_cast<int>(queue.size()) == hi + 1 ? base_kind::complete : base_kind::regular;
            out.bases.push_back({queue, hi, kind});
        }
    }
    return out;
}

} // namespace kcol::detail
