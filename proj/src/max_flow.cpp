#include "max_flow.hpp"

#include <algorithm>
#include <climits>

namespace kcol::detail {

int max_flow::add_arc(int from, int to, int capacity)
{
    const int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, capacity, 0});
    adj_[from].push_back(id);
    arcs_.push_back({from, 0, 0});
    adj_[to].push_back(id + 1);
    return id;
}

bool max_flow::levelize(int source, int sink)
{
    level_.assign(adj_.size(), -1);
    std::vector<int> queue{source};
    level_[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        for (int id : adj_[u]) {
            const auto& a = arcs_[id];
            if (a.flow < a.capacity && level_[a.to] < 0) {
                level_[a.to] = level_[u] + 1;
                queue.push_back(a.to);
            }
        }
    }
    return level_[sink] >= 0;
}

int max_flow::push(int node, int sink, int limit)
{
    if (node == sink)
        return limit;
    for (auto& i = next_[node]; i < adj_[node].size(); ++i) {
        const int id = adj_[node][i];
        auto& a = arcs_[id];
        if (a.flow >= a.capacity || level_[a.to] != level_[node] + 1)
            continue;
        const int pushed = push(a.to, sink, std::min(limit, a.capacity - a.flow));
        if (pushed > 0) {
            a.flow += pushed;
            arcs_[id ^ 1].flow -= pushed;
            return pushed;
        }
    }
    return 0;
}

long long max_flow::run(int source, int sink)
{
    long long total = 0;
    while (levelize(source, sink)) {
        next_.assign(adj_.size(), 0);
        while (const int pushed = push(source, sink, INT_MAX))
            total += pushed;
    }
    return total;
}

std::vector<char> max_flow::source_side(int source) const
{
    std::vector<char> seen(adj_.size(), 0);
    std::vector<int> queue{source};
    seen[source] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (int id : adj_[queue[head]]) {
            const auto& a = arcs_[id];
            if (a.flow < a.capacity && !seen[a.to]) {
                seen[a.to] = 1;
                queue.push_back(a.to);
            }
        }
    return seen;
}

} // namespace kcol::detail
