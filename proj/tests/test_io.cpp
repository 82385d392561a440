#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>

#include "fixtures.hpp"
#include "hyperspec/io.hpp"

using namespace hyperspec;

namespace {

ErrorKind parse_kind(std::string_view text) {
    try {
        io::parse(text);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("text format") {
    const auto h = io::parse_hg("# comment\n\n3 1\n1 2 3\n");
    CHECK(h == fixtures::single_edge(3));
    CHECK(io::to_hg(h) == "3 1\n1 2 3\n");
    CHECK(io::parse_hg("  4 2 \r\n 1 2\r\n3\t4\n") == fixtures::make(4, {{1, 2}, {3, 4}}));
}

TEST_CASE("json format") {
    const auto h = io::parse("{\"vertices\": 4, \"edges\": [[1,2,3],[2,3,4]]}");
    CHECK(h == fixtures::make(4, {{1, 2, 3}, {2, 3, 4}}));
    CHECK(io::to_json(h) == "{\"vertices\":4,\"edges\":[[1,2,3],[2,3,4]]}\n");
    CHECK(io::detect_format("  {") == io::Format::Json);
    CHECK(io::detect_format("3 1") == io::Format::Text);
}

TEST_CASE("parse errors") {
    CHECK(parse_kind("3 2\n1 2 3\n") == ErrorKind::Parse);
    CHECK(parse_kind("3 1\n1 2 x\n") == ErrorKind::Parse);
    CHECK(parse_kind("3\n1 2 3\n") == ErrorKind::Parse);
    CHECK(parse_kind("") == ErrorKind::Parse);
    CHECK(parse_kind("{\"vertices\": 3}") == ErrorKind::Parse);
    CHECK(parse_kind("{\"vertices\": 3, \"edges\": [[1, \"a\"]]}") == ErrorKind::Parse);
    CHECK(parse_kind("{oops") == ErrorKind::Parse);
    // Well-formed but invalid hypergraphs surface as validation errors.
    CHECK(parse_kind("3 2\n1 2 3\n1 2\n") == ErrorKind::SubsetEdge);
    CHECK(parse_kind("3 1\n1 5\n") == ErrorKind::OutOfRangeVertex);
}

TEST_CASE("round trips through both formats") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto h = generate(RandomConnectedUniform{7, 3, 6, seed});
        CHECK(io::parse(io::serialize(h, io::Format::Text)) == h);
        CHECK(io::parse(io::serialize(h, io::Format::Json)) == h);
        CHECK(io::serialize(io::parse(io::serialize(h, io::Format::Text)), io::Format::Text) ==
              io::serialize(h, io::Format::Text));
    }
}

TEST_CASE("atomic file writes") {
    const auto dir = std::filesystem::temp_directory_path() / "hyperspec_io_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "h.hg").string();
    io::write_file_atomic(path, io::to_hg(fixtures::k34()));
    CHECK(io::read_file(path) == fixtures::k34());
    CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
    std::filesystem::remove_all(dir);
    CHECK_THROWS_AS(io::read_file((dir / "missing.hg").string()), Error);
}

TEST_CASE("shortest round-trip doubles") {
    CHECK(io::format_double(0.5) == "0.5");
    CHECK(io::format_double(2.0) == "2");
    CHECK(io::format_double(0.1) == "0.1");
    CHECK(io::format_double(1.0 / 3.0) == "0.3333333333333333");
    CHECK(io::format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
    CHECK(io::format_double(-std::numeric_limits<double>::infinity()) == "-inf");
    for (double x : {1e-300, 123456.789, -2.5e17, 4.440892098500626e-16})
        CHECK(std::stod(io::format_double(x)) == x);
}
