#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kcol/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct result {
    int code;
    std::string out;
    std::string err;
    json report() const { return json::parse(out); }
};

result run(std::vector<std::string> args, const std::string& stdin_text = "")
{
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = kcol::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text)
{
    const auto dir = fs::temp_directory_path() / "kcol_cli_test";
    fs::create_directories(dir);
    const auto path = dir / name;
    std::ofstream(path) << text;
    return path.string();
}

} // namespace

TEST_CASE("color reports a verified coloring")
{
    const auto r = run({"color", "--format", "graph6"}, "IheA@GUAo\n");
    REQUIRE(r.code == 0);
    const auto rep = r.report();
    CHECK(rep["schema"] == "1");
    CHECK(rep["command"] == "color");
    CHECK(rep["input"]["n"] == 10);
    CHECK(rep["input"]["m"] == 15);
    CHECK(rep["input"]["max_degree"] == 3);
    CHECK(rep["result"]["colors_used"] == 3);
    CHECK(rep["checks"]["verified"] == true);
    CHECK(rep.contains("wall_ms"));

    const auto one = run({"color", "--one-based"}, "p edge 2 1\ne 1 2\n");
    REQUIRE(one.code == 0);
    auto colors = one.report()["result"]["coloring"].get<std::vector<int>>();
    std::sort(colors.begin(), colors.end());
    CHECK(colors == std::vector<int>{1, 2});
}

TEST_CASE("same input gives the same payload")
{
    const auto a = run({"color"}, "IheA@GUAo").report();
    const auto b = run({"color"}, "IheA@GUAo").report();
    CHECK(a["result"] == b["result"]);
    const auto g1 = run({"gen", "random_regular", "12", "3", "--seed", "9"}).report();
    const auto g2 = run({"gen", "random_regular", "12", "3", "--seed", "9"}).report();
    CHECK(g1["result"] == g2["result"]);
}

TEST_CASE("orient on the star is infeasible with exit 1")
{
    const auto demands = write_temp("star.json", R"({"0":2,"1":1,"2":1,"3":1})");
    const auto r = run({"orient", "--demands", demands}, "p edge 4 3\ne 1 2\ne 1 3\ne 1 4\n");
    CHECK(r.code == 1);
    const auto rep = r.report();
    CHECK(rep["result"]["feasible"] == false);
    CHECK(rep["result"]["violator"].size() == 4);
    CHECK(rep["checks"]["violator_verified"] == true);

    const auto ones = write_temp("ones.json", "[1,1,1,1]");
    const auto c4 = run({"orient", "--demands", ones}, "Cl\n");
    CHECK(c4.code == 0);
    CHECK(c4.report()["checks"]["demands_met"] == true);
}

TEST_CASE("list-color accepts good lists and rejects short ones")
{
    const auto good = write_temp("good.json", R"({"0":[0,1,2],"1":[1,2,3],"2":[0,2,3]})");
    const auto r = run({"list-color", "--lists", good}, "Bw");
    REQUIRE(r.code == 0);
    CHECK(r.report()["checks"]["verified"] == true);

    const auto bad = write_temp("bad.json", R"({"0":[0,1,2],"1":[1,2],"2":[0,2,3]})");
    const auto s = run({"list-color", "--lists", bad}, "Bw");
    CHECK(s.code == 2);
    CHECK(s.err.find("vertex 1") != std::string::npos);
}

TEST_CASE("kernel, witness, paint, oracle, verify")
{
    const auto part = write_temp("part.json", R"({"A":[0,2],"heads":[[0,1,1],[1,2,2],[2,3,3],[0,3,0]]})");
    const auto k = run({"kernel", "--partition", part}, "Cl");
    REQUIRE(k.code == 0);
    CHECK(k.report()["checks"]["is_kernel"] == true);

    const auto f2 = write_temp("f2.json", "[2,2,2,2]");
    const auto w = run({"witness", "--f", f2}, "Cl");
    REQUIRE(w.code == 0);
    CHECK(w.report()["checks"]["f_choosable_brute_force"] == true);
    const auto f5 = write_temp("f5.json", "[2,2,2,2,2]");
    CHECK(run({"witness", "--f", f5}, "Dhc").code == 1);

    CHECK(run({"paint", "--tokens", f2, "--painter", "minimax"}, "Cl").code == 0);
    CHECK(run({"paint", "--tokens", f5, "--painter", "minimax"}, "Dhc").code == 1);
    const auto kp = run({"paint", "--tokens", f2, "--partition", part}, "Cl");
    CHECK(kp.code == 0);
    CHECK(kp.report()["checks"]["tokens_cover_outdegree"] == true);

    CHECK(run({"oracle", "chi"}, "Dhc").report()["result"]["chi"] == 3);
    CHECK(run({"oracle", "omega"}, "IheA@GUAo").report()["result"]["omega"] == 2);
    CHECK(run({"oracle", "choosable", "--k", "2"}, "Cl").code == 0);
    CHECK(run({"oracle", "choosable", "--k", "2"}, "Dhc").code == 1);
    CHECK(run({"oracle", "paintable", "--tokens", f2}, "Cl").code == 0);
    CHECK(run({"oracle", "choosable"}, "Cl").code == 2);

    const auto good = write_temp("col.json", "[0,1,0,1]");
    const auto bad = write_temp("badcol.json", "[0,0,1,1]");
    CHECK(run({"verify", "--coloring", good}, "Cl").code == 0);
    CHECK(run({"verify", "--coloring", bad}, "Cl").code == 1);
}

TEST_CASE("gen writes files and bench verifies")
{
    const auto path = (fs::temp_directory_path() / "kcol_cli_test" / "pet.col").string();
    const auto g = run({"gen", "petersen", "--out", path, "--out-format", "dimacs"});
    REQUIRE(g.code == 0);
    CHECK(g.report()["result"]["graph6"] == "IheA@GUAo");
    const auto c = run({"color", "--in", path, "--format", "dimacs"});
    CHECK(c.code == 0);

    const auto b = run({"bench", "--count", "4", "--n", "30", "--jobs", "2"});
    REQUIRE(b.code == 0);
    CHECK(b.report()["checks"]["verified"] == true);
    CHECK(b.report()["result"]["instances"].size() == 4);
}

TEST_CASE("exit code contract")
{
    CHECK(run({"color"}, "A_").code == 0);
    const auto f = write_temp("f5b.json", "[2,2,2,2,2]");
    CHECK(run({"oracle", "choosable", "--f", f}, "Dhc").code == 1);
    CHECK(run({"color", "--format", "dimacs"}, "p edge 2 1\ne 1 3\n").code == 2);
    CHECK(run({"color", "--in", "/nonexistent/file"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"gen", "random_regular", "5", "3"}).code == 2);
    CHECK(run({"oracle", "chi"}, "M~~~~~~~~~~~~~~~_").code == 2);

    setenv("KCOL_INJECT_FAULT", "color", 1);
    const auto broken = run({"color"}, "IheA@GUAo");
    unsetenv("KCOL_INJECT_FAULT");
    CHECK(broken.code == 3);
    CHECK(broken.err.find("graph6: IheA@GUAo") != std::string::npos);
}

TEST_CASE("parse warnings surface in the report")
{
    const auto r = run({"color"}, "p edge 2 1\ne 1 2\ne 2 1\n");
    REQUIRE(r.code == 0);
    CHECK(r.report()["input"]["warnings"].size() == 1);
    CHECK(r.err.find("duplicate") != std::string::npos);
}
