#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

const fs::path& workdir() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / "hyperspec_cli_test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string path(const std::string& name) { return (workdir() / name).string(); }

void write(const std::string& name, const std::string& text) { std::ofstream(path(name)) << text; }

std::string read(const std::string& name) {
    std::ifstream in(path(name));
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

int run(const std::string& args) {
    const std::string cmd = std::string(HYPERSPEC_CLI) + " " + args + " > " + path("stdout.txt") +
                            " 2> " + path("stderr.txt");
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("spectrum command") {
    write("se3.hg", "3 1\n1 2 3\n");
    REQUIRE(run("spectrum " + path("se3.hg")) == 0);
    const auto j = nlohmann::json::parse(read("stdout.txt"));
    const auto q = j["signlessLaplacian"];
    REQUIRE(q.size() == 3);
    CHECK(q[0].get<double>() == doctest::Approx(2.0));
    CHECK(q[1].get<double>() == doctest::Approx(0.5));
    CHECK(q[2].get<double>() == doctest::Approx(0.5));

    write("bad.hg", "3 2\n1 2 3\n");
    CHECK(run("spectrum " + path("bad.hg")) == 2);
    CHECK(run("spectrum " + path("missing.hg")) == 2);
    write("subset.hg", "3 2\n1 2 3\n1 2\n");
    CHECK(run("spectrum " + path("subset.hg")) == 3);
    write("split.hg", "6 2\n1 2 3\n4 5 6\n");
    CHECK(run("spectrum " + path("split.hg")) == 0);
    CHECK(run("spectrum --require-connected " + path("split.hg")) == 3);
}

TEST_CASE("bounds command") {
    write("se3.hg", "3 1\n1 2 3\n");
    REQUIRE(run("bounds --csv " + path("se3.hg")) == 0);
    const auto csv = read("stdout.txt");
    for (const char* id : {"B01", "B04", "B05", "B18"}) {
        const auto at = csv.find(std::string("\n") + id + ",");
        REQUIRE(at != std::string::npos);
        const auto line = csv.substr(at + 1, csv.find('\n', at + 1) - at - 1);
        CHECK_MESSAGE(line.size() > 14, id);
        CHECK_MESSAGE(line.substr(line.size() - 14) == "true,true,true", line);
    }

    write("k23.hg", "5 6\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n");
    REQUIRE(run("bounds --json " + path("k23.hg")) == 0);
    const auto j = nlohmann::json::parse(read("stdout.txt"));
    const auto b02 = j["evaluations"][1];
    CHECK(b02["bound_id"] == "B02");
    CHECK(b02["holds"] == false);
    CHECK(b02["assurance"] == "audited");
    CHECK(b02["lhs"].get<double>() == doctest::Approx(5.0));
    CHECK(b02["rhs"].get<double>() == doctest::Approx(7.0));
    CHECK(run("bounds --strict-audit " + path("k23.hg")) == 4);

    write("r7.hg", "7 3\n1 2 3\n3 4 5\n3 6 7\n");
    REQUIRE(run("bounds --audit " + path("r7.hg")) == 0);
    const auto r = nlohmann::json::parse(read("stdout.txt"));
    const auto b08 = r["evaluations"][7];
    CHECK(b08["bound_id"] == "B08");
    CHECK(b08["applicable"] == false);
    CHECK(b08["reason"].get<std::string>().find("d_max <= km/(n-1)") != std::string::npos);

    write("split.hg", "6 2\n1 2 3\n4 5 6\n");
    CHECK(run("bounds " + path("split.hg")) == 3);
    CHECK(run("bounds --allow-any " + path("split.hg")) == 0);
    write("mixed.hg", "4 2\n1 2\n2 3 4\n");
    CHECK(run("bounds " + path("mixed.hg")) == 3);
    CHECK(run("bounds --csv --json " + path("se3.hg")) == 1);
}

TEST_CASE("generate command") {
    REQUIRE(run("generate completeUniform 4 3 -o " + path("k43.hg")) == 0);
    CHECK(read("k43.hg") == "4 4\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n");
    REQUIRE(run("generate singleEdge 5 -o " + path("se5.hg")) == 0);
    CHECK(read("se5.hg") == "5 1\n1 2 3 4 5\n");
    REQUIRE(run("generate randomConnectedUniform 6 3 5 --seed 1 -o " + path("r1.hg")) == 0);
    REQUIRE(run("generate randomConnectedUniform 6 3 5 --seed 1 -o " + path("r2.hg")) == 0);
    CHECK(read("r1.hg") == read("r2.hg"));
    CHECK(run("generate completeUniform 2 3 -o " + path("infeasible.hg")) == 3);
    CHECK_FALSE(fs::exists(path("infeasible.hg")));
    REQUIRE(run("generate completeBipartiteGraph 2 3 --format json") == 0);
    CHECK(read("stdout.txt") == "{\"vertices\":5,\"edges\":[[1,3],[1,4],[1,5],[2,3],[2,4],[2,5]]}\n");
}

TEST_CASE("complement and verify commands") {
    write("one.hg", "4 1\n1 2 3\n");
    REQUIRE(run("complement " + path("one.hg")) == 0);
    CHECK(read("stdout.txt") == "4 3\n1 2 4\n1 3 4\n2 3 4\n");
    write("se3.hg", "3 1\n1 2 3\n");
    REQUIRE(run("verify " + path("se3.hg")) == 0);
    CHECK(nlohmann::json::parse(read("stdout.txt"))["passed"] == true);
}

TEST_CASE("sweep command is deterministic across workers") {
    const std::string common = "sweep --n 3:7 --k 3 --m 1:8 --samples 20 --seed 7 ";
    REQUIRE(run(common + "--workers 1 -o " + path("w1.csv") + " --summary " + path("w1.json")) == 0);
    REQUIRE(run(common + "--workers 8 -o " + path("w8.csv") + " --summary " + path("w8.json")) == 0);
    CHECK(read("w1.csv") == read("w8.csv"));
    CHECK(read("w1.json") == read("w8.json"));
    CHECK(nlohmann::json::parse(read("w1.json"))["asserted_violations"] == 0);

    REQUIRE(run("sweep --family singleEdge --k 3:12 -o " + path("se.csv")) == 0);
    CHECK(read("se.csv").find("singleEdge") != std::string::npos);
}
