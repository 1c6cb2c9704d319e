#include "kcol/oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>

#include "kcol/errors.hpp"

namespace kcol::oracle {

namespace {

using mask_t = std::uint64_t;

void check_limit(int n, int limit, const char* what)
{
    if (n > limit)
        throw resource_error(std::string(what) + ": " + std::to_string(n) + " vertices exceed the limit of "
                             + std::to_string(limit));
    if (n > 64)
        throw resource_error(std::string(what) + ": at most 64 vertices are supported");
}

std::vector<mask_t> adjacency_masks(const graph& g)
{
    std::vector<mask_t> adj(static_cast<std::size_t>(g.vertex_count()), 0);
    for (vertex v = 0; v < g.vertex_count(); ++v)
        for (vertex w : g.neighbors(v))
            adj[v] |= mask_t{1} << w;
    return adj;
}

bool k_colorable(const std::vector<mask_t>& adj, const std::vector<vertex>& order, int k)
{
    const std::size_t n = order.size();
    std::vector<int> col(adj.size(), -1);
    // Colors beyond the largest one used so far are interchangeable.
    auto place = [&](auto&& self, std::size_t i, int used) -> bool {
        if (i == n)
            return true;
        const vertex v = order[i];
        const int top = std::min(k, used + 1);
        for (int c = 0; c < top; ++c) {
            bool clash = false;
            for (mask_t m = adj[v]; m; m &= m - 1)
                if (col[std::countr_zero(m)] == c) {
                    clash = true;
                    break;
                }
            if (clash)
                continue;
            col[v] = c;
            if (self(self, i + 1, std::max(used, c + 1)))
                return true;
            col[v] = -1;
        }
        return false;
    };
    return place(place, 0, 0);
}

void grow_clique(const std::vector<mask_t>& adj, mask_t candidates, int size, int& best)
{
    if (candidates == 0) {
        best = std::max(best, size);
        return;
    }
    if (size + std::popcount(candidates) <= best)
        return;
    while (candidates) {
        if (size + std::popcount(candidates) <= best)
            return;
        const int v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        grow_clique(adj, candidates & adj[v], size + 1, best);
    }
}

// Backtracking list coloring over bitmask lists.
bool colorable_from(const std::vector<mask_t>& adj, const std::vector<mask_t>& lists, std::vector<int>& col,
                    std::size_t i)
{
    if (i == adj.size())
        return true;
    mask_t blocked = 0;
    for (mask_t m = adj[i] & ((mask_t{1} << i) - 1); m; m &= m - 1)
        blocked |= mask_t{1} << col[std::countr_zero(m)];
    for (mask_t options = lists[i] & ~blocked; options; options &= options - 1) {
        col[i] = std::countr_zero(options);
        if (colorable_from(adj, lists, col, i + 1))
            return true;
    }
    return false;
}

// Enumerates list assignments on the core up to color renaming: vertex i
// takes some of the colors already introduced plus a block of brand-new ones.
class choosability_search {
public:
    choosability_search(std::vector<mask_t> adj, std::vector<int> f)
        : adj_(std::move(adj)), f_(std::move(f)), lists_(adj_.size(), 0), col_(adj_.size(), -1)
    {
    }

    bool all_colorable() { return assign(0, 0); }

private:
    bool assign(std::size_t i, int introduced)
    {
        if (i == adj_.size())
            return colorable_from(adj_, lists_, col_, 0);
        const int size = f_[i];
        for (int fresh = 0; fresh <= size; ++fresh) {
            const int reused = size - fresh;
            if (reused > introduced)
                continue;
            mask_t fresh_bits = 0;
            for (int c = introduced; c < introduced + fresh; ++c)
                fresh_bits |= mask_t{1} << c;
            if (!choose_old(i, introduced, fresh, fresh_bits, 0, reused, 0))
                return false;
        }
        return true;
    }

    bool choose_old(std::size_t i, int introduced, int fresh, mask_t fresh_bits, int from, int left, mask_t picked)
    {
        if (left == 0) {
            lists_[i] = picked | fresh_bits;
            return assign(i + 1, introduced + fresh);
        }
        for (int c = from; c <= introduced - left; ++c)
            if (!choose_old(i, introduced, fresh, fresh_bits, c + 1, left - 1, picked | (mask_t{1} << c)))
                return false;
        return true;
    }

    std::vector<mask_t> adj_;
    std::vector<int> f_;
    std::vector<mask_t> lists_;
    std::vector<int> col_;
};

class paint_game {
public:
    paint_game(const graph& g, std::span<const int> tokens, const paint_options& options)
        : n_(g.vertex_count()), adj_(adjacency_masks(g)), options_(options)
    {
        start_.assign(tokens.begin(), tokens.end());
    }

    player solve()
    {
        const mask_t all = n_ == 0 ? 0 : (mask_t{1} << n_) - 1;
        return painter_wins(all, start_) ? player::painter : player::lister;
    }

private:
    bool independent(mask_t s) const
    {
        for (mask_t m = s; m; m &= m - 1)
            if (adj_[std::countr_zero(m)] & s)
                return false;
        return true;
    }

    std::uint64_t key(mask_t uncolored, const std::vector<int>& tokens) const
    {
        std::uint64_t k = uncolored;
        for (int v = 0; v < n_; ++v)
            k |= static_cast<std::uint64_t>((uncolored >> v) & 1 ? tokens[v] : 0) << (8 + 6 * v);
        return k;
    }

    std::vector<mask_t> lister_moves(mask_t uncolored) const
    {
        std::vector<mask_t> moves;
        for (mask_t s = uncolored; s; s = (s - 1) & uncolored)
            moves.push_back(s);
        std::reverse(moves.begin(), moves.end());
        if (options_.lister_shuffle_seed != 0) {
            std::mt19937_64 rng(options_.lister_shuffle_seed ^ uncolored);
            for (std::size_t i = moves.size(); i > 1; --i)
                std::swap(moves[i - 1], moves[rng() % i]);
        }
        return moves;
    }

    bool after(mask_t uncolored, mask_t revealed, mask_t painted, const std::vector<int>& paid)
    {
        for (mask_t m = revealed & ~painted; m; m &= m - 1)
            if (paid[std::countr_zero(m)] == 0)
                return false;
        return painter_wins(uncolored & ~painted, paid);
    }

    mask_t fixed_reply(mask_t revealed) const
    {
        std::vector<vertex> members;
        for (mask_t m = revealed; m; m &= m - 1)
            members.push_back(std::countr_zero(m));
        const auto reply = options_.painter(vertex_set(n_, std::move(members)));
        mask_t painted = 0;
        for (vertex v : reply)
            painted |= mask_t{1} << v;
        if ((painted & ~revealed) || !independent(painted))
            throw invariant_violation("painter strategy returned a set that is not an independent subset of the reveal");
        return painted;
    }

    bool painter_wins(mask_t uncolored, const std::vector<int>& tokens)
    {
        if (uncolored == 0)
            return true;
        for (mask_t m = uncolored; m; m &= m - 1)
            if (tokens[std::countr_zero(m)] == 0)
                return false;
        const auto k = key(uncolored, tokens);
        if (auto it = memo_.find(k); it != memo_.end())
            return it->second;

        bool wins = true;
        for (mask_t revealed : lister_moves(uncolored)) {
            auto paid = tokens;
            for (mask_t m = revealed; m; m &= m - 1)
                --paid[std::countr_zero(m)];
            bool answered = false;
            if (options_.painter) {
                answered = after(uncolored, revealed, fixed_reply(revealed), paid);
            } else {
                for (mask_t painted = revealed;; painted = (painted - 1) & revealed) {
                    if (independent(painted) && after(uncolored, revealed, painted, paid)) {
                        answered = true;
                        break;
                    }
                    if (painted == 0)
                        break;
                }
            }
            if (!answered) {
                wins = false;
                break;
            }
        }
        memo_.emplace(k, wins);
        return wins;
    }

    int n_;
    std::vector<mask_t> adj_;
    paint_options options_;
    std::vector<int> start_;
    std::unordered_map<std::uint64_t, bool> memo_;
};

struct digraph_masks {
    std::vector<mask_t> out;
    std::vector<mask_t> touch;
};

digraph_masks masks_of(const digraph& d)
{
    digraph_masks m{std::vector<mask_t>(static_cast<std::size_t>(d.vertex_count()), 0),
                    std::vector<mask_t>(static_cast<std::size_t>(d.vertex_count()), 0)};
    for (vertex u = 0; u < d.vertex_count(); ++u)
        for (vertex v : d.out_neighbors(u)) {
            m.out[u] |= mask_t{1} << v;
            m.touch[u] |= mask_t{1} << v;
            m.touch[v] |= mask_t{1} << u;
        }
    return m;
}

// Kernel of the subdigraph induced by `within`.
bool kernel_in(const digraph_masks& m, mask_t within, mask_t k)
{
    for (mask_t r = k; r; r &= r - 1)
        if (m.touch[std::countr_zero(r)] & k)
            return false;
    for (mask_t r = within & ~k; r; r &= r - 1)
        if (!(m.out[std::countr_zero(r)] & k))
            return false;
    return true;
}

} // namespace

int chromatic_number(const graph& g, int limit)
{
    const int n = g.vertex_count();
    check_limit(n, limit, "chromatic_number");
    if (n == 0)
        return 0;
    const auto adj = adjacency_masks(g);
    std::vector<vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](vertex a, vertex b) { return g.degree(a) > g.degree(b); });
    for (int k = 1;; ++k)
        if (k_colorable(adj, order, k))
            return k;
}

int clique_number(const graph& g, int limit)
{
    const int n = g.vertex_count();
    check_limit(n, limit, "clique_number");
    if (n == 0)
        return 0;
    const auto adj = adjacency_masks(g);
    int best = 0;
    grow_clique(adj, n == 64 ? ~mask_t{0} : (mask_t{1} << n) - 1, 0, best);
    return best;
}

std::optional<coloring> is_list_colorable(const graph& g, const list_assignment& lists, int limit)
{
    const int n = g.vertex_count();
    check_limit(n, limit, "is_list_colorable");
    if (lists.size() != n)
        throw input_error("list assignment size does not match graph order");
    coloring col(n);
    auto place = [&](auto&& self, vertex v) -> bool {
        if (v == n)
            return true;
        for (int c : lists[v]) {
            auto nb = g.neighbors(v);
            if (std::any_of(nb.begin(), nb.end(), [&](vertex w) { return w < v && col[w] == c; }))
                continue;
            col.assign(v, c);
            if (self(self, v + 1))
                return true;
        }
        col.clear(v);
        return false;
    };
    if (!place(place, 0))
        return std::nullopt;
    return col;
}

bool is_f_choosable(const graph& g, std::span<const int> f)
{
    const int n = g.vertex_count();
    if (static_cast<int>(f.size()) != n)
        throw input_error("f must be defined on every vertex");
    for (vertex v = 0; v < n; ++v)
        if (f[v] <= 0)
            return false;

    std::vector<char> alive(f.size(), 1);
    std::vector<int> deg(f.size());
    for (vertex v = 0; v < n; ++v)
        deg[v] = g.degree(v);
    for (bool changed = true; changed;) {
        changed = false;
        for (vertex v = 0; v < n; ++v)
            if (alive[v] && f[v] > deg[v]) {
                alive[v] = 0;
                for (vertex w : g.neighbors(v))
                    --deg[w];
                changed = true;
            }
    }
    const auto core = induced_subgraph(g, vertex_set::from_indicator(alive));
    const int k = core.local.vertex_count();
    if (k == 0)
        return true;
    int total = 0;
    std::vector<int> core_f;
    for (vertex p : core.to_parent) {
        core_f.push_back(f[p]);
        total += f[p];
    }
    if (k > 6 || total > 18)
        throw resource_error("is_f_choosable: core of " + std::to_string(k) + " vertices with total f "
                             + std::to_string(total) + " exceeds 6 vertices / total 18");
    return choosability_search(adjacency_masks(core.local), std::move(core_f)).all_colorable();
}

player paint_game_solve(const graph& g, std::span<const int> tokens, const paint_options& options)
{
    const int n = g.vertex_count();
    check_limit(n, options.painter ? 8 : 5, "paint_game_solve");
    if (static_cast<int>(tokens.size()) != n)
        throw input_error("tokens must be given for every vertex");
    for (vertex v = 0; v < n; ++v)
        if (tokens[v] < 0 || tokens[v] > 63)
            throw input_error("token count of vertex " + std::to_string(v) + " must lie in [0, 63]");
    return paint_game(g, tokens, options).solve();
}

std::optional<vertex_set> brute_kernel(const digraph& d)
{
    const int n = d.vertex_count();
    check_limit(n, 15, "brute_kernel");
    const auto m = masks_of(d);
    const mask_t all = (mask_t{1} << n) - 1;
    for (mask_t k = 0; k <= all; ++k)
        if (kernel_in(m, all, k)) {
            std::vector<vertex> members;
            for (mask_t r = k; r; r &= r - 1)
                members.push_back(std::countr_zero(r));
            return vertex_set(n, std::move(members));
        }
    return std::nullopt;
}

bool is_kernel_perfect(const digraph& d)
{
    const int n = d.vertex_count();
    check_limit(n, 12, "is_kernel_perfect");
    const auto m = masks_of(d);
    const mask_t all = (mask_t{1} << n) - 1;
    for (mask_t within = 1; within <= all; ++within) {
        bool found = false;
        for (mask_t k = within;; k = (k - 1) & within) {
            if (kernel_in(m, within, k)) {
                found = true;
                break;
            }
            if (k == 0)
                break;
        }
        if (!found)
            return false;
    }
    return true;
}

bool is_kernel(const digraph& d, const vertex_set& candidate)
{
    const int n = d.vertex_count();
    if (candidate.ambient_size() != n)
        throw input_error("candidate ambient size does not match digraph order");
    const auto in = candidate.indicator();
    for (vertex v = 0; v < n; ++v) {
        auto out = d.out_neighbors(v);
        if (in[v]) {
            if (std::any_of(out.begin(), out.end(), [&](vertex w) { return in[w] != 0; }))
                return false;
        } else if (std::none_of(out.begin(), out.end(), [&](vertex w) { return in[w] != 0; })) {
            return false;
        }
    }
    return true;
}

bool verify_coloring(const graph& g, const coloring& c, const list_assignment* lists)
{
    if (c.size() != g.vertex_count() || !c.total() || !is_proper(g, c))
        return false;
    if (lists == nullptr)
        return true;
    if (lists->size() != g.vertex_count())
        return false;
    for (vertex v = 0; v < g.vertex_count(); ++v)
        if (!lists->contains(v, c[v]))
            return false;
    return true;
}

} // namespace kcol::oracle
