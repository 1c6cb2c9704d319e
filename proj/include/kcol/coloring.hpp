#pragma once

#include <span>
#include <vector>

#include "kcol/graph.hpp"

namespace kcol {

// Partial or total vertex coloring with non-negative integer colors.
class coloring {
public:
    static constexpr int uncolored = -1;

    coloring() = default;
    explicit coloring(int n) : colors_(static_cast<std::size_t>(n), uncolored) {}
    explicit coloring(std::vector<int> colors);

    int size() const { return static_cast<int>(colors_.size()); }
    bool is_colored(vertex v) const { return colors_[v] != uncolored; }
    int operator[](vertex v) const { return colors_[v]; }
    void assign(vertex v, int color);
    void clear(vertex v) { colors_[v] = uncolored; }

    bool total() const;
    int colors_used() const;
    int max_color() const;
    std::span<const int> values() const { return colors_; }

    // Relabels the colors in use to 0..k-1, preserving their order.
    void compact();

    bool operator==(const coloring&) const = default;

private:
    std::vector<int> colors_;
};

// Per-vertex finite color lists, kept sorted and deduplicated.
class list_assignment {
public:
    list_assignment() = default;
    explicit list_assignment(std::vector<std::vector<int>> lists);

    int size() const { return static_cast<int>(lists_.size()); }
    std::span<const int> operator[](vertex v) const { return lists_[v]; }
    int list_size(vertex v) const { return static_cast<int>(lists_[v].size()); }
    bool contains(vertex v, int color) const;

private:
    std::vector<std::vector<int>> lists_;
};

// Adjacent colored vertices differ. Uncolored vertices are ignored.
bool is_proper(const graph& g, const coloring& c);

// Distinct colors appearing on the given vertices.
int colors_on(const coloring& c, std::span<const vertex> vertices);

} // namespace kcol
