#include <cstdio>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "seu/enumerate.hpp"
#include "seu/errors.hpp"
#include "seu/io.hpp"
#include "seu/rng.hpp"

using namespace seu;

namespace {

void expect_parse_error(const std::string& text, const std::string& needle) {
    try {
        parse_edge_list_string(text);
        FAIL("expected input_error for: " << text);
    } catch (const input_error& e) {
        CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos,
                      "message '" << e.what() << "' lacks '" << needle << "'");
    }
}

} // namespace

TEST_CASE("edge list round trips") {
    SplitMix64 rng(3);
    for (int n = 1; n <= 8; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            const Digraph d = random_digraph(n, 0.5, rng);
            CHECK(parse_edge_list_string(to_edge_list(d)) == d);
        }
}

TEST_CASE("edge list golden form") {
    const Digraph d = Digraph::from_arcs(4, {{0, 2}, {1, 2}, {2, 3}, {3, 0}, {3, 1}, {3, 2}});
    CHECK(to_edge_list(d) == "n 4\n0 2\n1 2\n2 3\n3 0\n3 1\n3 2\n");
    CHECK(to_edge_list(Digraph(1)) == "n 1\n");
}

TEST_CASE("parser accepts comments, blanks and CRLF") {
    const Digraph d = parse_edge_list_string("# header comment\n\nn 3\n  \n0 1\n# mid\n1 2\n2 0\n");
    CHECK(d.order() == 3);
    CHECK(d.arc_count() == 3);
    CHECK(parse_edge_list_string("n 2\r\n0 1\r\n") == Digraph::from_arcs(2, {{0, 1}}));
}

TEST_CASE("parse errors carry line numbers") {
    expect_parse_error("", "missing 'n <count>' header");
    expect_parse_error("x 3\n", "line 1");
    expect_parse_error("n\n", "line 1");
    expect_parse_error("n 0\n", "between 1 and");
    expect_parse_error("n 99\n", "between 1 and");
    expect_parse_error("n 3 junk\n", "trailing content");
    expect_parse_error("n 3\n0 1\n5 x\n", "line 3");
    expect_parse_error("n 3\n0 3\n", "line 2");
    expect_parse_error("n 3\n0 1 2\n", "trailing content");
    expect_parse_error("n 2\n0 1\n0 1\n", "line 3");
    expect_parse_error("n 2\n1 1\n", "loop");
}

TEST_CASE("dot output") {
    const Digraph d = test::dicycle(3);
    CHECK(to_dot(d) == "digraph D {\n  0;\n  1;\n  2;\n  0 -> 1;\n  1 -> 2;\n  2 -> 0;\n}\n");
    const std::vector<std::string> labels{"a", "b", "c"};
    CHECK(to_dot(d, &labels) ==
          "digraph D {\n  0 [label=\"a\"];\n  1 [label=\"b\"];\n  2 [label=\"c\"];\n"
          "  0 -> 1;\n  1 -> 2;\n  2 -> 0;\n}\n");
}

TEST_CASE("file round trip and open failure") {
    const auto path = (std::filesystem::temp_directory_path() / "seu_io_test.txt").string();
    const Digraph d = test::complete_digraph(3);
    write_text_file(path, to_edge_list(d));
    CHECK(parse_edge_list_file(path) == d);
    std::remove(path.c_str());
    CHECK_THROWS_AS(parse_edge_list_file(path), input_error);
}
