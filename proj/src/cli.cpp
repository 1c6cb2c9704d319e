#include "kcol/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "kcol/brooks.hpp"
#include "kcol/choosability.hpp"
#include "kcol/errors.hpp"
#include "kcol/io.hpp"
#include "kcol/kernels.hpp"
#include "kcol/oracles.hpp"
#include "kcol/orientations.hpp"

namespace kcol::cli {

namespace {

using json = nlohmann::ordered_json;
using clock_type = std::chrono::steady_clock;

struct graph_input {
    std::string path;
    std::string format = "auto";
};

struct outcome {
    json result;
    json checks = json::object();
    int code = exit_code::ok;
    std::string summary;
};

// Shared state so the error path can dump whatever instance was loaded.
struct session {
    std::istream& in;
    std::ostream& err;
    bool one_based = false;
    std::optional<graph> loaded;
    std::vector<std::string> warnings;
};

std::string read_file(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw input_error("cannot open '" + path + "'");
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

bool looks_like_dimacs(std::string_view text)
{
    std::istringstream lines{std::string(text)};
    for (std::string line; std::getline(lines, line);) {
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos)
            continue;
        const char c = line[start];
        const bool word = start + 1 >= line.size() || std::isspace(static_cast<unsigned char>(line[start + 1]));
        return word && (c == 'p' || c == 'c' || c == 'e');
    }
    return false;
}

const graph& load_graph(session& s, const graph_input& input)
{
    const std::string text = input.path.empty() || input.path == "-"
                                 ? std::string(std::istreambuf_iterator<char>(s.in), {})
                                 : read_file(input.path);
    std::string format = input.format;
    if (format == "auto")
        format = looks_like_dimacs(text) ? "dimacs" : "graph6";
    if (format == "dimacs") {
        auto parsed = io::parse_dimacs(text);
        s.warnings = std::move(parsed.warnings);
        s.loaded = std::move(parsed.g);
    } else {
        std::istringstream lines(text);
        std::string first;
        while (std::getline(lines, first) && first.find_first_not_of(" \t\r") == std::string::npos) {
        }
        s.loaded = io::parse_graph6(first);
    }
    for (const auto& w : s.warnings)
        s.err << "warning: " << w << '\n';
    return *s.loaded;
}

json vertices_json(const vertex_set& set) { return json(std::vector<vertex>(set.begin(), set.end())); }

json coloring_json(const session& s, const coloring& c)
{
    json out = json::array();
    for (int x : c.values())
        out.push_back(x < 0 ? x : x + (s.one_based ? 1 : 0));
    return out;
}

void require(bool condition, const std::string& what)
{
    if (!condition)
        throw invariant_violation("self-check failed: " + what);
}

bool fault_requested(std::string_view command)
{
    const char* fault = std::getenv("KCOL_INJECT_FAULT");
    return fault != nullptr && command == fault;
}

int max_bound(const graph& g)
{
    const auto bounds = component_bounds(g);
    return bounds.empty() ? 0 : *std::max_element(bounds.begin(), bounds.end());
}

outcome do_color(session& s, const graph& g)
{
    brooks_trace trace;
    auto c = brooks_color(g, &trace);
    if (fault_requested("color") && g.edge_count() > 0)
        c = coloring(std::vector<int>(static_cast<std::size_t>(g.vertex_count()), 0));

    const auto bounds = component_bounds(g);
    bool within = true;
    for (const auto& comp : components(g))
        within = within && colors_on(c, comp.members()) <= bounds[comp[0]];
    const bool verified = oracle::verify_coloring(g, c);

    outcome o;
    o.result = {{"colors_used", c.colors_used()},
                {"bound", max_bound(g)},
                {"coloring", coloring_json(s, c)},
                {"trace",
                 {{"small_degree", trace.small_degree},
                  {"complete", trace.complete},
                  {"peeled", trace.peeled},
                  {"hitting_class", trace.hitting_class},
                  {"diamond", trace.diamond},
                  {"cycle_surgery", trace.cycle_surgery}}}};
    o.checks = {{"verified", verified}, {"within_bound", within}};
    require(verified, "coloring is not proper and total");
    require(within, "a component uses more colors than its bound");
    o.summary = std::to_string(c.colors_used()) + " colors, verified";
    return o;
}

outcome do_list_color(session& s, const graph& g, const std::string& lists_path)
{
    const auto lists = io::parse_lists_json(read_file(lists_path), g.vertex_count());
    list_brooks_trace trace;
    auto c = list_brooks_color(g, lists, &trace);
    if (fault_requested("list-color") && g.vertex_count() > 0)
        c.clear(0);

    const bool verified = oracle::verify_coloring(g, c, &lists);
    bool critical_ok = true;
    json critical = json::array();
    for (const auto& r : trace.critical) {
        critical_ok = critical_ok && r.all_cross_degrees_two && r.cross_edges == r.order;
        critical.push_back({{"order", r.order}, {"cross_edges", r.cross_edges},
                            {"all_cross_degrees_two", r.all_cross_degrees_two}});
    }
    outcome o;
    o.result = {{"colors_used", c.colors_used()}, {"coloring", coloring_json(s, c)}, {"critical_subgraphs", critical}};
    o.checks = {{"verified", verified}, {"critical_subgraphs_tight", critical_ok}};
    require(verified, "list coloring is not proper, total, and on-list");
    require(critical_ok, "a critical subgraph does not have cross degree 2 everywhere");
    o.summary = "list coloring verified";
    return o;
}

outcome do_orient(const graph& g, const std::string& demands_path)
{
    const auto demand = io::parse_vertex_values(read_file(demands_path), g.vertex_count(), "demands");
    const auto res = solve_min_indegree_orientation(g, demand);
    outcome o;
    if (res.feasible()) {
        const auto& ori = res.oriented();
        json arcs = json::array();
        for (std::size_t i = 0; i < ori.edges.size(); ++i)
            arcs.push_back({ori.edges[i].u, ori.edges[i].v, ori.heads[i]});
        const bool met = verify_orientation_demands(ori, g, demand);
        o.result = {{"feasible", true}, {"flow", res.flow_value}, {"orientation", arcs},
                    {"in_degrees", ori.in_degrees(g.vertex_count())}};
        o.checks = {{"demands_met", met}};
        require(met, "orientation misses a demand");
        o.summary = "orientation found, demands met";
    } else {
        const bool valid = verify_violator(g, demand, res.violator());
        o.result = {{"feasible", false}, {"flow", res.flow_value}, {"violator", vertices_json(res.violator())}};
        o.checks = {{"violator_verified", valid}};
        require(valid, "violator does not certify infeasibility");
        o.code = exit_code::negative;
        o.summary = "infeasible, violator of size " + std::to_string(res.violator().size());
    }
    return o;
}

// Large independent set when the coloring route applies, otherwise a greedy
// maximal one (paths, odd cycles, cliques).
vertex_set auto_independent_set(const graph& g)
{
    if (g.edge_count() > 0) {
        try {
            return large_independent_set(g);
        } catch (const input_error&) {
        }
    }
    return expand_to_maximal_independent(g, vertex_set(g.vertex_count()));
}

// Heads default to the B endpoint, so every cross edge points out of A.
ab_digraph ab_from(const graph& g, const io::partition& p)
{
    if (p.heads)
        return build_ab_digraph(g, p.a, *p.heads);
    head_map heads;
    for (const auto& e : g.edges()) {
        if (p.a.contains(e.u))
            heads[e] = e.v;
        else if (p.a.contains(e.v))
            heads[e] = e.u;
    }
    return build_ab_digraph(g, p.a, heads);
}

outcome do_kernel(const graph& g, const std::string& partition_path)
{
    const auto p = io::parse_partition_json(read_file(partition_path), g.vertex_count());
    const auto d = ab_from(g, p);
    const auto k = find_kernel_ab(d);
    const bool valid = oracle::is_kernel(d.arcs(), k);
    outcome o;
    o.result = {{"A", vertices_json(d.a_side())}, {"kernel", vertices_json(k)}};
    o.checks = {{"is_kernel", valid}};
    require(valid, "returned set is not a kernel");
    o.summary = "kernel of size " + std::to_string(k.size());
    return o;
}

outcome do_witness(const graph& g, const std::string& f_path, const std::string& a_path)
{
    const int n = g.vertex_count();
    const auto f = io::parse_vertex_values(read_file(f_path), n, "f");
    const vertex_set a = a_path.empty() ? auto_independent_set(g) : io::parse_partition_json(read_file(a_path), n).a;
    outcome o;
    try {
        const auto w = general_tool_witness(g, a, f);
        const int k = w.h.local.vertex_count();
        bool bounded = w.q.vertex_count() == k;
        json arcs = json::array();
        for (const auto& arc : w.q.arcs().arcs())
            arcs.push_back({w.h.to_parent[arc.u], w.h.to_parent[arc.v]});
        for (vertex v = 0; v < k && bounded; ++v)
            bounded = w.q.arcs().out_degree(v) <= w.f_h[v] - 1;
        json brute = nullptr;
        int total = 0;
        for (int x : w.f_h)
            total += x;
        if (k <= 6 && total <= 18)
            brute = oracle::is_f_choosable(w.h.local, w.f_h);
        o.result = {{"A", vertices_json(a)},
                    {"H", w.h.to_parent},
                    {"f_H", w.f_h},
                    {"arcs", arcs},
                    {"iterations", w.iterations}};
        o.checks = {{"outdegree_bound", bounded}, {"f_choosable_brute_force", brute}};
        require(bounded, "witness orientation exceeds f_H - 1 somewhere");
        require(brute.is_null() || brute.get<bool>(), "witness subgraph is not f_H-choosable");
        o.summary = "witness on " + std::to_string(k) + " vertices";
    } catch (const condition_unmet& e) {
        o.result = {{"A", vertices_json(a)}, {"satisfied", false}, {"reason", e.what()}};
        o.code = exit_code::negative;
        o.summary = std::string("condition unmet: ") + e.what();
    }
    return o;
}

outcome do_paint(const graph& g, const std::string& tokens_path, const std::string& painter,
                 const std::string& partition_path)
{
    const int n = g.vertex_count();
    const auto tokens = io::parse_vertex_values(read_file(tokens_path), n, "tokens");
    outcome o;
    if (painter == "minimax") {
        const auto winner = oracle::paint_game_solve(g, tokens);
        o.result = {{"painter", "minimax"}, {"winner", winner == oracle::player::painter ? "painter" : "lister"}};
        o.code = winner == oracle::player::painter ? exit_code::ok : exit_code::negative;
        o.summary = std::string(winner == oracle::player::painter ? "Painter" : "Lister") + " wins";
        return o;
    }
    io::partition p;
    if (!partition_path.empty())
        p = io::parse_partition_json(read_file(partition_path), n);
    else
        p.a = auto_independent_set(g);
    const auto d = ab_from(g, p);
    bool covered = true;
    for (vertex v = 0; v < n; ++v)
        covered = covered && tokens[v] >= d.arcs().out_degree(v) + 1;
    oracle::paint_options options;
    options.painter = [&](const vertex_set& revealed) { return painter_move(d, revealed); };
    const auto winner = oracle::paint_game_solve(g, tokens, options);
    const bool painter_wins = winner == oracle::player::painter;
    o.result = {{"painter", "kernel"}, {"A", vertices_json(d.a_side())}, {"winner", painter_wins ? "painter" : "lister"}};
    o.checks = {{"tokens_cover_outdegree", covered}};
    require(painter_wins || !covered, "kernel strategy lost although tokens exceed every out-degree");
    o.code = painter_wins ? exit_code::ok : exit_code::negative;
    o.summary = std::string(painter_wins ? "Painter" : "Lister") + " wins against the kernel strategy";
    return o;
}

outcome do_oracle(const graph& g, const std::string& what, const std::string& f_path, int k,
                  const std::string& tokens_path)
{
    const int n = g.vertex_count();
    outcome o;
    if (what == "chi" || what == "omega") {
        const int value = what == "chi" ? oracle::chromatic_number(g) : oracle::clique_number(g);
        o.result = {{what, value}};
        o.summary = what + " = " + std::to_string(value);
        return o;
    }
    if (what == "choosable") {
        std::vector<int> f;
        if (!f_path.empty())
            f = io::parse_vertex_values(read_file(f_path), n, "f");
        else if (k >= 0)
            f.assign(static_cast<std::size_t>(n), k);
        else
            throw input_error("oracle choosable needs --f FILE or --k K");
        const bool yes = oracle::is_f_choosable(g, f);
        o.result = {{"choosable", yes}};
        o.code = yes ? exit_code::ok : exit_code::negative;
        o.summary = yes ? "f-choosable" : "not f-choosable";
        return o;
    }
    if (tokens_path.empty())
        throw input_error("oracle paintable needs --tokens FILE");
    const auto tokens = io::parse_vertex_values(read_file(tokens_path), n, "tokens");
    const bool yes = oracle::paint_game_solve(g, tokens) == oracle::player::painter;
    o.result = {{"paintable", yes}};
    o.code = yes ? exit_code::ok : exit_code::negative;
    o.summary = yes ? "paintable" : "not paintable";
    return o;
}

outcome do_verify(const graph& g, const std::string& coloring_path, const std::string& lists_path)
{
    const int n = g.vertex_count();
    auto c = io::parse_coloring_json(read_file(coloring_path), n);
    outcome o;
    o.checks = {{"total", c.total()}, {"proper", is_proper(g, c)}};
    bool good = c.total() && is_proper(g, c);
    if (!lists_path.empty()) {
        const auto lists = io::parse_lists_json(read_file(lists_path), n);
        bool on_lists = true;
        for (vertex v = 0; v < n; ++v)
            on_lists = on_lists && (!c.is_colored(v) || lists.contains(v, c[v]));
        o.checks["on_lists"] = on_lists;
        good = good && on_lists;
    }
    o.result = {{"valid", good}, {"colors_used", c.colors_used()}};
    o.code = good ? exit_code::ok : exit_code::negative;
    o.summary = good ? "coloring valid" : "coloring invalid";
    return o;
}

outcome do_gen(const std::string& kind, const std::vector<double>& params, std::uint64_t seed,
               const std::string& out_path, const std::string& out_format)
{
    const auto g = io::gen::by_name(kind, params, seed);
    const auto g6 = io::encode_graph6(g);
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f)
            throw input_error("cannot write '" + out_path + "'");
        f << (out_format == "dimacs" ? io::write_dimacs(g) : g6 + "\n");
    }
    outcome o;
    o.result = {{"kind", kind}, {"params", params}, {"seed", seed}, {"n", g.vertex_count()},
                {"m", g.edge_count()}, {"max_degree", g.vertex_count() ? g.max_degree() : 0}, {"graph6", g6}};
    o.summary = kind + " on " + std::to_string(g.vertex_count()) + " vertices";
    return o;
}

struct bench_row {
    int n = 0;
    int d = 0;
    std::uint64_t seed = 0;
    int colors = 0;
    int list_colors = 0;
    bool verified = false;
    double color_ms = 0;
    double list_ms = 0;
};

bench_row bench_one(int n, int d, std::uint64_t seed)
{
    bench_row row{n, d, seed};
    const auto g = io::gen::random_regular(n, d, seed);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const int size = std::max(3, d);
    std::vector<std::vector<int>> raw(static_cast<std::size_t>(n));
    for (auto& list : raw) {
        std::vector<int> pool(static_cast<std::size_t>(2 * d));
        for (int i = 0; i < 2 * d; ++i)
            pool[i] = i;
        for (int i = 0; i < size; ++i) {
            std::swap(pool[i], pool[i + static_cast<int>(rng() % static_cast<std::uint64_t>(2 * d - i))]);
            list.push_back(pool[i]);
        }
    }
    const list_assignment lists(std::move(raw));

    auto t0 = clock_type::now();
    const auto c = brooks_color(g);
    auto t1 = clock_type::now();
    const auto lc = list_brooks_color(g, lists);
    auto t2 = clock_type::now();
    row.colors = c.colors_used();
    row.list_colors = lc.colors_used();
    row.verified = oracle::verify_coloring(g, c) && oracle::verify_coloring(g, lc, &lists);
    row.color_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    row.list_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
    return row;
}

outcome do_bench(int count, int n, int jobs, std::uint64_t seed)
{
    if (count < 1 || jobs < 1 || n < 6)
        throw input_error("bench: need --count >= 1, --jobs >= 1, --n >= 6");
    std::vector<bench_row> rows(static_cast<std::size_t>(count));
    std::vector<std::string> failures(static_cast<std::size_t>(count));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i; (i = next++) < count;) {
            const int d = 3 + i % 3;
            const int order = (n * d) % 2 ? n + 1 : n;
            try {
                rows[i] = bench_one(order, d, seed + static_cast<std::uint64_t>(i));
            } catch (const std::exception& e) {
                failures[i] = e.what();
            }
        }
    };
    const auto t0 = clock_type::now();
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    const double wall = std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();

    for (int i = 0; i < count; ++i)
        if (!failures[i].empty())
            throw invariant_violation("bench instance " + std::to_string(i) + ": " + failures[i]);
    json instances = json::array();
    double color_ms = 0;
    double list_ms = 0;
    bool all_verified = true;
    for (const auto& r : rows) {
        instances.push_back({{"n", r.n}, {"d", r.d}, {"seed", r.seed}, {"colors", r.colors},
                             {"list_colors", r.list_colors}, {"verified", r.verified}});
        color_ms += r.color_ms;
        list_ms += r.list_ms;
        all_verified = all_verified && r.verified;
    }
    outcome o;
    o.result = {{"instances", instances},
                {"timing",
                 {{"jobs", jobs},
                  {"color_ms", color_ms},
                  {"list_color_ms", list_ms},
                  {"graphs_per_second", wall > 0 ? 1000.0 * count / wall : 0.0}}}};
    o.checks = {{"verified", all_verified}};
    require(all_verified, "a bench coloring failed verification");
    o.summary = std::to_string(count) + " instances, all verified";
    return o;
}

void dump_instance(const session& s, const std::vector<std::string>& args)
{
    s.err << "--- instance for bug report ---\nargs:";
    for (const auto& a : args)
        s.err << ' ' << a;
    s.err << '\n';
    if (s.loaded) {
        s.err << "graph6: " << io::encode_graph6(*s.loaded) << '\n';
        s.err << io::write_dimacs(*s.loaded);
    }
    s.err << "---\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Constructive coloring, list coloring and orientation toolkit", "kcol"};
    app.require_subcommand(1, 1);
    session s{in, err, false, std::nullopt, {}};
    graph_input input;

    auto graph_command = [&](const std::string& name, const std::string& about) {
        auto* sub = app.add_subcommand(name, about);
        sub->add_option("--in", input.path, "Graph file (default: stdin)");
        sub->add_option("--format", input.format, "dimacs, graph6, or auto")
            ->check(CLI::IsMember({"auto", "dimacs", "graph6"}));
        sub->add_flag("--one-based", s.one_based, "Print colors starting from 1");
        return sub;
    };

    std::string lists_path, demands_path, partition_path, f_path, a_path, tokens_path, coloring_path;
    std::string painter = "kernel", what, kind, out_path, out_format = "graph6";
    std::vector<double> params;
    std::uint64_t seed = 1;
    int k = -1, count = 12, bench_n = 60, jobs = 1;

    auto* color = graph_command("color", "Color with at most max{3, omega, Delta} colors");
    auto* list_color = graph_command("list-color", "Color from lists of size max{3, omega, Delta}");
    list_color->add_option("--lists", lists_path, "JSON lists")->required();
    auto* orient = graph_command("orient", "Orientation with in-degree at least the demands");
    orient->add_option("--demands", demands_path, "JSON demand per vertex")->required();
    auto* kernel = graph_command("kernel", "Kernel of an A/B orientation");
    kernel->add_option("--partition", partition_path, "JSON {\"A\": [...], \"heads\": [...]}")->required();
    auto* witness = graph_command("witness", "Choosability witness (H, Q, f_H)");
    witness->add_option("--f", f_path, "JSON f per vertex")->required();
    witness->add_option("--A", a_path, "JSON {\"A\": [...]}; default picks a large independent set");
    auto* paint = graph_command("paint", "Play the online list coloring game");
    paint->add_option("--tokens", tokens_path, "JSON tokens per vertex")->required();
    paint->add_option("--painter", painter, "kernel or minimax")->check(CLI::IsMember({"kernel", "minimax"}));
    paint->add_option("--partition", partition_path, "A/B partition for the kernel strategy");
    auto* oracle_cmd = graph_command("oracle", "Exhaustive answers for small graphs");
    oracle_cmd->add_option("what", what, "chi, omega, choosable, or paintable")
        ->required()
        ->check(CLI::IsMember({"chi", "omega", "choosable", "paintable"}));
    oracle_cmd->add_option("--f", f_path, "JSON f per vertex (choosable)");
    oracle_cmd->add_option("--k", k, "Uniform list size (choosable)");
    oracle_cmd->add_option("--tokens", tokens_path, "JSON tokens per vertex (paintable)");
    auto* verify = graph_command("verify", "Check a coloring");
    verify->add_option("--coloring", coloring_path, "JSON coloring")->required();
    verify->add_option("--lists", lists_path, "JSON lists the colors must come from");
    auto* gen = app.add_subcommand("gen", "Generate a graph");
    gen->add_option("kind", kind, "cycle, path, complete, complete_bipartite, petersen, cube, random_regular, erdos_renyi")
        ->required();
    gen->add_option("params", params, "Generator parameters");
    gen->add_option("--seed", seed, "Seed for random kinds");
    gen->add_option("--out", out_path, "Also write the graph to this file");
    gen->add_option("--out-format", out_format, "graph6 or dimacs")->check(CLI::IsMember({"graph6", "dimacs"}));
    auto* bench = app.add_subcommand("bench", "Time color and list-color on random regular graphs");
    bench->add_option("--count", count, "Number of graphs");
    bench->add_option("--n", bench_n, "Order of each graph");
    bench->add_option("--jobs", jobs, "Worker threads");
    bench->add_option("--seed", seed, "Base seed");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::bad_input;
    }

    auto* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    const auto t0 = clock_type::now();
    try {
        json input_summary = nullptr;
        const graph* g = nullptr;
        if (sub != gen && sub != bench) {
            g = &load_graph(s, input);
            input_summary = {{"n", g->vertex_count()},
                             {"m", g->edge_count()},
                             {"max_degree", g->vertex_count() ? g->max_degree() : 0}};
            if (!s.warnings.empty())
                input_summary["warnings"] = s.warnings;
        }
        outcome o;
        if (sub == color)
            o = do_color(s, *g);
        else if (sub == list_color)
            o = do_list_color(s, *g, lists_path);
        else if (sub == orient)
            o = do_orient(*g, demands_path);
        else if (sub == kernel)
            o = do_kernel(*g, partition_path);
        else if (sub == witness)
            o = do_witness(*g, f_path, a_path);
        else if (sub == paint)
            o = do_paint(*g, tokens_path, painter, partition_path);
        else if (sub == oracle_cmd)
            o = do_oracle(*g, what, f_path, k, tokens_path);
        else if (sub == verify)
            o = do_verify(*g, coloring_path, lists_path);
        else if (sub == gen)
            o = do_gen(kind, params, seed, out_path, out_format);
        else
            o = do_bench(count, bench_n, jobs, seed);

        const double wall = std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
        json report = {{"schema", "1"},
                       {"command", command},
                       {"input", input_summary},
                       {"result", o.result},
                       {"checks", o.checks},
                       {"wall_ms", wall}};
        out << report.dump(2) << '\n';
        err << command << ": " << o.summary << '\n';
        return o.code;
    } catch (const invariant_violation& e) {
        err << "internal error: " << e.what() << '\n';
        dump_instance(s, args);
        return exit_code::internal_error;
    } catch (const input_error& e) {
        err << "input error: " << e.what() << '\n';
        return exit_code::bad_input;
    } catch (const resource_error& e) {
        err << "limit exceeded: " << e.what() << '\n';
        return exit_code::bad_input;
    } catch (const condition_unmet& e) {
        err << "condition unmet: " << e.what() << '\n';
        return exit_code::negative;
    }
}

} // namespace kcol::cli
