#include "doctest.h"

#include <filesystem>

#include "fanol2/error.hpp"
#include "fanol2/textio.hpp"
#include "oracles.hpp"

using namespace fanol2;

namespace {

std::size_t parse_error_line(std::string_view text)
{
    try {
        parse_any(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

} // namespace

TEST_CASE("3graph round trip")
{
    const Uniform3Graph b5 = balanced_bipartite3(5);
    const std::string text = format_3graph(b5);
    CHECK(text.rfind("3graph 5\n", 0) == 0);
    CHECK(parse_3graph(text) == b5);
    CHECK(sniff_kind(text) == FileKind::Hyper3);
}

TEST_CASE("graph and mgraph round trips")
{
    const SimpleGraph g = shat(9, 2, 4);
    CHECK(parse_graph(format_graph(g)) == g);
    const MMultigraph mg = bipartite_construction_5(6);
    const std::string text = format_mgraph(mg);
    CHECK(text.rfind("mgraph 6 5\n", 0) == 0);
    CHECK(parse_mgraph(text) == mg);
    CHECK(std::get<MMultigraph>(parse_any(text)) == mg);
}

TEST_CASE("blank lines are ignored and edges may come in any order")
{
    const Uniform3Graph h = parse_3graph("3graph 4\n\n1 2 3\n\n0 1 2\n");
    CHECK(h.edge_count() == 2);
    CHECK(h.has_edge(0, 1, 2));
}

TEST_CASE("parse errors carry line numbers")
{
    CHECK(parse_error_line("3graph 4\n0 1 2\n1 2\n") == 3);
    CHECK(parse_error_line("3graph 4\n0 1 7\n") == 2);
    CHECK(parse_error_line("3graph 4\n0 1 2\n0 1 2\n") == 3);
    CHECK(parse_error_line("3graph 4\n2 1 0\n") == 2);
    CHECK(parse_error_line("graph 3\n0 0\n") == 2);
    CHECK(parse_error_line("mgraph 3 2\n0 1 3\n") == 2);
    CHECK(parse_error_line("mgraph 3 2\n0 1 2,1\n") == 2);
    CHECK(parse_error_line("mgraph 3 40\n") == 1);
    CHECK(parse_error_line("hypergraph 3\n") == 1);
    CHECK(parse_error_line("") == 1);
    CHECK(parse_error_line("3graph x\n") == 1);
    CHECK(parse_error_line("3graph 100000\n") == 1);
    CHECK_THROWS_WITH_AS(parse_3graph("3graph 4\n0 1 2\n1 2\n"), doctest::Contains("line 3"), ParseError);
    CHECK_THROWS_AS(parse_graph("3graph 4\n"), ParseError);
}

TEST_CASE("file io")
{
    const auto path = std::filesystem::temp_directory_path() / "fanol2_textio_test.3graph";
    write_text_file(path.string(), format_3graph(fano_plane()));
    CHECK(parse_3graph(read_text_file(path.string())) == fano_plane());
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_text_file("/nonexistent/dir/file"), Error);
}

TEST_CASE("property: random objects survive formatting")
{
    oracle::Rng rng(99);
    for (int i = 0; i < 50; ++i) {
        const Uniform3Graph h = oracle::random_3graph(rng, rng.between(0, 12), rng.between(0, 100));
        CHECK(parse_3graph(format_3graph(h)) == h);
        const MMultigraph mg = oracle::random_multigraph(rng, rng.between(1, 9), static_cast<unsigned>(rng.between(1, 7)),
                                                         rng.between(0, 100));
        CHECK(parse_mgraph(format_mgraph(mg)) == mg);
    }
}
