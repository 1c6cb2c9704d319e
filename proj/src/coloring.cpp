#include "kcol/coloring.hpp"

#include <algorithm>
#include <string>

#include "kcol/errors.hpp"

namespace kcol {

coloring::coloring(std::vector<int> colors) : colors_(std::move(colors))
{
    for (int c : colors_)
        if (c < uncolored)
            throw input_error("negative color " + std::to_string(c));
}

void coloring::assign(vertex v, int color)
{
    if (color < 0)
        throw input_error("negative color " + std::to_string(color));
    colors_[v] = color;
}

bool coloring::total() const
{
    return std::none_of(colors_.begin(), colors_.end(), [](int c) { return c == uncolored; });
}

int coloring::colors_used() const
{
    std::vector<int> seen;
    for (int c : colors_)
        if (c != uncolored)
            seen.push_back(c);
    std::sort(seen.begin(), seen.end());
    return static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

int coloring::max_color() const
{
    int best = uncolored;
    for (int c : colors_)
        best = std::max(best, c);
    return best;
}

void coloring::compact()
{
    std::vector<int> used;
    for (int c : colors_)
        if (c != uncolored)
            used.push_back(c);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    for (int& c : colors_)
        if (c != uncolored)
            c = static_cast<int>(std::lower_bound(used.begin(), used.end(), c) - used.begin());
}

list_assignment::list_assignment(std::vector<std::vector<int>> lists) : lists_(std::move(lists))
{
    for (std::size_t v = 0; v < lists_.size(); ++v) {
        auto& l = lists_[v];
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
        if (!l.empty() && l.front() < 0)
            throw input_error("negative color in list of vertex " + std::to_string(v));
    }
}

bool list_assignment::contains(vertex v, int color) const
{
    return std::binary_search(lists_[v].begin(), lists_[v].end(), color);
}

bool is_proper(const graph& g, const coloring& c)
{
    if (c.size() != g.vertex_count())
        return false;
    for (const auto& e : g.edges())
        if (c.is_colored(e.u) && c[e.u] == c[e.v])
            return false;
    return true;
}

int colors_on(const coloring& c, std::span<const vertex> vertices)
{
    std::vector<int> seen;
    for (vertex v : vertices)
        if (c.is_colored(v))
            seen.push_back(c[v]);
    std::sort(seen.begin(), seen.end());
    return static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

} // namespace kcol
