#pragma once

#include <vector>

namespace kcol::detail {

// Dinic's algorithm on integral capacities.
class max_flow {
public:
    explicit max_flow(int nodes) : adj_(static_cast<std::size_t>(nodes)) {}

    // Returns the index of the forward arc.
    int add_arc(int from, int to, int capacity);

    long long run(int source, int sink);

    int flow_on(int arc) const { return arcs_[arc].flow; }
    // Nodes reachable from the source in the final residual network.
    std::vector<char> source_side(int source) const;

private:
    struct arc {
        int to;
        int capacity;
        int flow;
    };

    bool levelize(int source, int sink);
    int push(int node, int sink, int limit);

    std::vector<arc> arcs_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> level_;
    std::vector<std::size_t> next_;
};

} // namespace kcol::detail
