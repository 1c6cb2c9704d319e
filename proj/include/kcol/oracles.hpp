#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "kcol/coloring.hpp"
#include "kcol/graph.hpp"

// Exhaustive ground truth for small instances. Every routine either answers
// exactly or throws resource_error; none of them approximates.
namespace kcol::oracle {

inline constexpr int default_limit = 12;

int chromatic_number(const graph& g, int limit = default_limit);
int clique_number(const graph& g, int limit = default_limit);

// A coloring from the lists if one exists.
std::optional<coloring> is_list_colorable(const graph& g, const list_assignment& lists,
                                          int limit = default_limit);

// Every assignment with |L(v)| = f(v) is colorable. Vertices with f(v) above
// their remaining degree are stripped first (they can always be colored
// last); the rest is checked against every list assignment up to color
// renaming, which requires at most 6 vertices and total f at most 18.
bool is_f_choosable(const graph& g, std::span<const int> f);

enum class player { lister, painter };

// Painter's reply to a reveal: an independent subset of `revealed`.
using painter_strategy = std::function<vertex_set(const vertex_set& revealed)>;

struct paint_options {
    // Fixed Painter strategy; when empty Painter is searched exhaustively too.
    painter_strategy painter;
    // Nonzero: enumerate Lister's moves in a seeded shuffled order.
    std::uint64_t lister_shuffle_seed = 0;
};

// Each round Lister reveals a nonempty set of uncolored vertices, each of
// which pays one token; Painter colors an independent subset of it. Lister
// wins once an uncolored vertex has no tokens, Painter once all are colored.
// Exhaustive minimax needs n <= 5; with a fixed Painter, n <= 8.
player paint_game_solve(const graph& g, std::span<const int> tokens, const paint_options& options = {});

// Smallest kernel by bitmask order, if any (n <= 15).
std::optional<vertex_set> brute_kernel(const digraph& d);
// Every induced subdigraph has a kernel (n <= 12).
bool is_kernel_perfect(const digraph& d);
bool is_kernel(const digraph& d, const vertex_set& candidate);

// Total, proper, and (when lists are given) drawn from each vertex's list.
bool verify_coloring(const graph& g, const coloring& c, const list_assignment* lists = nullptr);

} // namespace kcol::oracle
