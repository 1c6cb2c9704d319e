#include "kcol/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "kcol/errors.hpp"

namespace kcol::io {

namespace {

using json = nlohmann::json;

std::vector<std::string_view> split_words(std::string_view line)
{
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
            ++j;
        if (j > i)
            words.push_back(line.substr(i, j - i));
        i = j;
    }
    return words;
}

long long to_integer(std::string_view word, int line_no)
{
    long long value = 0;
    auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc{} || end != word.data() + word.size())
        throw input_error("line " + std::to_string(line_no) + ": '" + std::string(word) + "' is not an integer");
    return value;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

json parse_json(std::string_view text, std::string_view what)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string(what) + ": invalid JSON: " + e.what());
    }
}

// Decimal id key -> vertex; anything else names the key in the error.
vertex key_to_vertex(const std::string& key, int n, std::string_view what)
{
    vertex v = -1;
    auto [end, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
    if (ec != std::errc{} || end != key.data() + key.size() || key.empty())
        throw input_error(std::string(what) + ": key \"" + key + "\" is not a vertex id");
    if (v < 0 || v >= n)
        throw input_error(std::string(what) + ": key \"" + key + "\" is outside 0.." + std::to_string(n - 1));
    return v;
}

int non_negative(const json& value, std::string_view what, const std::string& key)
{
    if (!value.is_number_integer())
        throw input_error(std::string(what) + ": value at \"" + key + "\" is not an integer");
    const auto x = value.get<long long>();
    if (x < 0)
        throw input_error(std::string(what) + ": value at \"" + key + "\" is negative");
    if (x > 1'000'000'000)
        throw input_error(std::string(what) + ": value at \"" + key + "\" is too large");
    return static_cast<int>(x);
}

vertex id_in_range(const json& value, int n, std::string_view what)
{
    if (!value.is_number_integer())
        throw input_error(std::string(what) + ": vertex ids must be integers");
    const auto x = value.get<long long>();
    if (x < 0 || x >= n)
        throw input_error(std::string(what) + ": vertex " + std::to_string(x) + " is outside 0.."
                          + std::to_string(n - 1));
    return static_cast<vertex>(x);
}

// Uniform integer in [0, bound) by rejection, independent of the standard
// library's distribution implementations.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound)
{
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do
        x = rng();
    while (x >= limit);
    return x % bound;
}

int int_param(std::span<const double> params, std::size_t i, std::string_view kind)
{
    const double x = params[i];
    if (x != std::floor(x) || x < 0 || x > 1e7)
        throw input_error(std::string(kind) + ": parameter " + std::to_string(i + 1) + " must be a non-negative integer");
    return static_cast<int>(x);
}

} // namespace

parsed_graph parse_dimacs(std::string_view text)
{
    parsed_graph out;
    int n = -1;
    long long declared = 0;
    std::vector<edge> edges;
    std::set<edge> seen;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        const auto words = split_words(text.substr(pos, eol - pos));
        pos = eol + 1;
        ++line_no;
        if (words.empty() || words[0] == "c")
            continue;
        auto where = [&] { return "line " + std::to_string(line_no) + ": "; };
        if (words[0] == "p") {
            if (n >= 0)
                throw input_error(where() + "second problem line");
            if (words.size() != 4 || (words[1] != "edge" && words[1] != "col"))
                throw input_error(where() + "expected 'p edge <n> <m>'");
            const auto nn = to_integer(words[2], line_no);
            declared = to_integer(words[3], line_no);
            if (nn < 0 || nn > 10'000'000 || declared < 0)
                throw input_error(where() + "invalid vertex or edge count");
            n = static_cast<int>(nn);
            continue;
        }
        if (words[0] == "e") {
            if (n < 0)
                throw input_error(where() + "edge before the 'p' line");
            if (words.size() != 3)
                throw input_error(where() + "expected 'e <u> <v>'");
            const auto u = to_integer(words[1], line_no);
            const auto v = to_integer(words[2], line_no);
            for (auto x : {u, v})
                if (x < 1 || x > n)
                    throw input_error(where() + "vertex " + std::to_string(x) + " outside 1.." + std::to_string(n));
            if (u == v)
                throw input_error(where() + "self-loop at vertex " + std::to_string(u));
            const auto e = normalized({static_cast<vertex>(u - 1), static_cast<vertex>(v - 1)});
            if (!seen.insert(e).second) {
                out.warnings.push_back(where() + "duplicate edge " + std::to_string(u) + "-" + std::to_string(v)
                                       + " collapsed");
                continue;
            }
            edges.push_back(e);
            continue;
        }
        throw input_error(where() + "unknown line type '" + std::string(words[0]) + "'");
    }
    if (n < 0)
        throw input_error("line " + std::to_string(line_no) + ": missing 'p edge <n> <m>' line");
    if (declared != static_cast<long long>(edges.size()))
        out.warnings.push_back("declared " + std::to_string(declared) + " edges but found "
                               + std::to_string(edges.size()) + " distinct");
    out.g = graph::from_edges(n, edges);
    return out;
}

std::string write_dimacs(const graph& g)
{
    std::ostringstream s;
    s << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges())
        s << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    return s.str();
}

graph parse_graph6(std::string_view line)
{
    line = trim(line);
    if (line.starts_with(">>graph6<<"))
        line.remove_prefix(10);
    for (std::size_t i = 0; i < line.size(); ++i) {
        const auto c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126)
            throw input_error("graph6: byte " + std::to_string(i) + " (value " + std::to_string(c)
                              + ") outside 63..126");
    }
    if (line.empty())
        throw input_error("graph6: empty string");

    std::size_t pos = 0;
    long long n = 0;
    if (line[0] != '~') {
        n = line[0] - 63;
        pos = 1;
    } else {
        if (line.size() >= 2 && line[1] == '~')
            throw input_error("graph6: orders of 2^18 and above are not supported");
        if (line.size() < 4)
            throw input_error("graph6: truncated size field");
        for (std::size_t i = 1; i < 4; ++i)
            n = (n << 6) | (line[i] - 63);
        pos = 4;
    }
    const long long bits = n * (n - 1) / 2;
    const long long bytes = (bits + 5) / 6;
    const auto body = line.substr(pos);
    if (static_cast<long long>(body.size()) < bytes)
        throw input_error("graph6: truncated adjacency data (" + std::to_string(body.size()) + " of "
                          + std::to_string(bytes) + " bytes)");
    if (static_cast<long long>(body.size()) > bytes)
        throw input_error("graph6: " + std::to_string(body.size() - bytes) + " trailing bytes");

    std::vector<edge> edges;
    long long k = 0;
    for (vertex j = 1; j < n; ++j)
        for (vertex i = 0; i < j; ++i, ++k) {
            const int group = body[static_cast<std::size_t>(k / 6)] - 63;
            if ((group >> (5 - k % 6)) & 1)
                edges.push_back({i, j});
        }
    return graph::from_edges(static_cast<int>(n), edges);
}

std::string encode_graph6(const graph& g)
{
    const long long n = g.vertex_count();
    if (n >= (1LL << 18))
        throw input_error("graph6: orders of 2^18 and above are not supported");
    std::string s;
    if (n < 63) {
        s.push_back(static_cast<char>(n + 63));
    } else {
        s.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            s.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int group = 0;
    int filled = 0;
    for (vertex j = 1; j < n; ++j)
        for (vertex i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                s.push_back(static_cast<char>(group + 63));
                group = filled = 0;
            }
        }
    if (filled > 0)
        s.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return s;
}

list_assignment parse_lists_json(std::string_view text, int n)
{
    const auto doc = parse_json(text, "lists");
    if (!doc.is_object())
        throw input_error("lists: expected an object mapping vertex ids to color arrays");
    std::vector<std::vector<int>> lists(static_cast<std::size_t>(n));
    std::vector<char> present(static_cast<std::size_t>(n), 0);
    for (const auto& [key, value] : doc.items()) {
        const vertex v = key_to_vertex(key, n, "lists");
        if (!value.is_array())
            throw input_error("lists: value at \"" + key + "\" is not an array");
        for (const auto& c : value)
            lists[v].push_back(non_negative(c, "lists", key));
        present[v] = 1;
    }
    for (vertex v = 0; v < n; ++v)
        if (!present[v])
            throw input_error("lists: vertex " + std::to_string(v) + " missing");
    return list_assignment(std::move(lists));
}

std::vector<int> parse_vertex_values(std::string_view text, int n, std::string_view what)
{
    const auto doc = parse_json(text, what);
    std::vector<int> values(static_cast<std::size_t>(n), 0);
    if (doc.is_array()) {
        if (static_cast<int>(doc.size()) != n)
            throw input_error(std::string(what) + ": expected " + std::to_string(n) + " values, got "
                              + std::to_string(doc.size()));
        for (vertex v = 0; v < n; ++v)
            values[v] = non_negative(doc[static_cast<std::size_t>(v)], what, std::to_string(v));
        return values;
    }
    if (!doc.is_object())
        throw input_error(std::string(what) + ": expected an object or an array");
    std::vector<char> present(static_cast<std::size_t>(n), 0);
    for (const auto& [key, value] : doc.items()) {
        const vertex v = key_to_vertex(key, n, what);
        values[v] = non_negative(value, what, key);
        present[v] = 1;
    }
    for (vertex v = 0; v < n; ++v)
        if (!present[v])
            throw input_error(std::string(what) + ": vertex " + std::to_string(v) + " missing");
    return values;
}

partition parse_partition_json(std::string_view text, int n)
{
    const auto doc = parse_json(text, "partition");
    if (!doc.is_object() || !doc.contains("A") || !doc["A"].is_array())
        throw input_error("partition: expected {\"A\": [vertex ids]}");
    std::vector<vertex> a;
    for (const auto& x : doc["A"])
        a.push_back(id_in_range(x, n, "partition"));
    partition out{vertex_set(n, std::move(a)), std::nullopt};
    if (doc.contains("heads")) {
        if (!doc["heads"].is_array())
            throw input_error("partition: \"heads\" must be an array of [u, v, head]");
        head_map heads;
        for (const auto& t : doc["heads"]) {
            if (!t.is_array() || t.size() != 3)
                throw input_error("partition: each head entry must be [u, v, head]");
            const edge e = normalized({id_in_range(t[0], n, "partition"), id_in_range(t[1], n, "partition")});
            if (!heads.emplace(e, id_in_range(t[2], n, "partition")).second)
                throw input_error("partition: edge " + std::to_string(e.u) + "-" + std::to_string(e.v)
                                  + " given twice");
        }
        out.heads = std::move(heads);
    }
    return out;
}

coloring parse_coloring_json(std::string_view text, int n)
{
    const auto doc = parse_json(text, "coloring");
    std::vector<int> colors(static_cast<std::size_t>(n), coloring::uncolored);
    auto read = [&](const json& value, const std::string& key) {
        if (!value.is_number_integer() || value.get<long long>() < -1 || value.get<long long>() > 1'000'000'000)
            throw input_error("coloring: value at \"" + key + "\" must be a color or -1");
        return static_cast<int>(value.get<long long>());
    };
    if (doc.is_array()) {
        if (static_cast<int>(doc.size()) != n)
            throw input_error("coloring: expected " + std::to_string(n) + " entries, got " + std::to_string(doc.size()));
        for (vertex v = 0; v < n; ++v)
            colors[v] = read(doc[static_cast<std::size_t>(v)], std::to_string(v));
    } else if (doc.is_object()) {
        for (const auto& [key, value] : doc.items())
            colors[key_to_vertex(key, n, "coloring")] = read(value, key);
    } else {
        throw input_error("coloring: expected an array or an object");
    }
    return coloring(std::move(colors));
}

namespace gen {

graph cycle(int n)
{
    if (n < 3)
        throw input_error("cycle: needs at least 3 vertices");
    std::vector<edge> edges;
    for (vertex v = 0; v < n; ++v)
        edges.push_back(normalized({v, (v + 1) % n}));
    return graph::from_edges(n, edges);
}

graph path(int n)
{
    if (n < 1)
        throw input_error("path: needs at least 1 vertex");
    std::vector<edge> edges;
    for (vertex v = 0; v + 1 < n; ++v)
        edges.push_back({v, v + 1});
    return graph::from_edges(n, edges);
}

graph complete(int n)
{
    if (n < 0)
        throw input_error("complete: negative order");
    std::vector<edge> edges;
    for (vertex u = 0; u < n; ++u)
        for (vertex v = u + 1; v < n; ++v)
            edges.push_back({u, v});
    return graph::from_edges(n, edges);
}

graph complete_bipartite(int a, int b)
{
    if (a < 0 || b < 0)
        throw input_error("complete_bipartite: negative side");
    std::vector<edge> edges;
    for (vertex u = 0; u < a; ++u)
        for (vertex v = a; v < a + b; ++v)
            edges.push_back({u, v});
    return graph::from_edges(a + b, edges);
}

graph petersen()
{
    std::vector<edge> edges;
    for (vertex i = 0; i < 5; ++i) {
        edges.push_back(normalized({i, (i + 1) % 5}));
        edges.push_back({i, i + 5});
        edges.push_back(normalized({5 + i, 5 + (i + 2) % 5}));
    }
    return graph::from_edges(10, edges);
}

graph cube()
{
    std::vector<edge> edges;
    for (vertex v = 0; v < 8; ++v)
        for (int bit = 1; bit < 8; bit <<= 1)
            if (!(v & bit))
                edges.push_back({v, v | bit});
    return graph::from_edges(8, edges);
}

graph random_regular(int n, int d, std::uint64_t seed)
{
    if (n < 1 || d < 0)
        throw input_error("random_regular: need n >= 1 and d >= 0");
    if (d >= n)
        throw input_error("random_regular: degree " + std::to_string(d) + " must be below n = " + std::to_string(n));
    if ((static_cast<long long>(n) * d) % 2 != 0)
        throw input_error("random_regular: n*d = " + std::to_string(static_cast<long long>(n) * d) + " is odd");
    constexpr int retry_cap = 200000;
    std::mt19937_64 rng(seed);
    std::vector<vertex> points;
    for (vertex v = 0; v < n; ++v)
        points.insert(points.end(), static_cast<std::size_t>(d), v);
    for (int attempt = 0; attempt < retry_cap; ++attempt) {
        for (std::size_t i = points.size(); i > 1; --i)
            std::swap(points[i - 1], points[below(rng, i)]);
        std::set<edge> edges;
        bool simple = true;
        for (std::size_t i = 0; i < points.size() && simple; i += 2)
            simple = points[i] != points[i + 1] && edges.insert(normalized({points[i], points[i + 1]})).second;
        if (simple) {
            const std::vector<edge> list(edges.begin(), edges.end());
            return graph::from_edges(n, list);
        }
    }
    throw resource_error("random_regular: no simple pairing after " + std::to_string(retry_cap) + " attempts");
}

graph erdos_renyi(int n, double p, std::uint64_t seed)
{
    if (n < 0 || !(p >= 0.0 && p <= 1.0))
        throw input_error("erdos_renyi: need n >= 0 and p in [0, 1]");
    std::mt19937_64 rng(seed);
    // Compare 53-bit integers so the threshold is exact.
    const auto threshold = static_cast<std::uint64_t>(std::ldexp(p, 53));
    std::vector<edge> edges;
    for (vertex u = 0; u < n; ++u)
        for (vertex v = u + 1; v < n; ++v)
            if ((rng() >> 11) < threshold)
                edges.push_back({u, v});
    return graph::from_edges(n, edges);
}

graph by_name(std::string_view kind, std::span<const double> params, std::uint64_t seed)
{
    auto expect = [&](std::size_t count) {
        if (params.size() != count)
            throw input_error(std::string(kind) + ": expected " + std::to_string(count) + " parameters, got "
                              + std::to_string(params.size()));
    };
    if (kind == "cycle" || kind == "path" || kind == "complete") {
        expect(1);
        const int n = int_param(params, 0, kind);
        return kind == "cycle" ? cycle(n) : kind == "path" ? path(n) : complete(n);
    }
    if (kind == "complete_bipartite") {
        expect(2);
        return complete_bipartite(int_param(params, 0, kind), int_param(params, 1, kind));
    }
    if (kind == "petersen") {
        expect(0);
        return petersen();
    }
    if (kind == "cube") {
        expect(0);
        return cube();
    }
    if (kind == "random_regular") {
        expect(2);
        return random_regular(int_param(params, 0, kind), int_param(params, 1, kind), seed);
    }
    if (kind == "erdos_renyi") {
        expect(2);
        return erdos_renyi(int_param(params, 0, kind), params[1], seed);
    }
    throw input_error("unknown generator '" + std::string(kind) + "'");
}

} // namespace gen

} // namespace kcol::io
