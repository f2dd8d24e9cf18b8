#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homcount/corpus.hpp"
#include "homcount/graph_io.hpp"

#include "support/oracles.hpp"

#include <functional>

using namespace homcount;

namespace {

ParseDiagnostic diagnostic_of(const std::function<void()>& body) {
    try {
        body();
    } catch (const ParseError& e) {
        return e.diagnostic();
    }
    FAIL("expected a ParseError");
    return {};
}

}  // namespace

TEST_CASE("graph6 hand-checked vectors") {
    CHECK(parse_graph6("?") == edgeless(0));
    CHECK(parse_graph6("@") == edgeless(1));
    CHECK(parse_graph6("A?") == edgeless(2));
    CHECK(parse_graph6("A@") == edgeless(2));  // nonzero padding bits are ignored
    CHECK(parse_graph6("A_") == complete(2));  // 1 then five pad zeros: 0b100000 + 63 = '_'
    CHECK(parse_graph6("Bw") == complete(3));
    CHECK(parse_graph6("Ch") == path(4));
    CHECK(parse_graph6("D~{") == complete(5));

    CHECK(write_graph6(edgeless(0)) == "?");
    CHECK(write_graph6(edgeless(1)) == "@");
    CHECK(write_graph6(edgeless(2)) == "A?");
    CHECK(write_graph6(complete(2)) == "A_");
    CHECK(write_graph6(complete(3)) == "Bw");
    CHECK(write_graph6(path(4)) == "Ch");
    CHECK(write_graph6(complete(5)) == "D~{");
}

TEST_CASE("graph6 bit order is column-major over the upper triangle") {
    // Only pair (0,2) set on three vertices: bits 010 -> 0b010000 = 16 -> 'O'.
    CHECK(parse_graph6("BO") == Graph(3, {{0, 2}}));
    CHECK(write_graph6(Graph(3, {{0, 2}})) == "BO");
}

TEST_CASE("graph6 accepts the optional header and trailing whitespace") {
    CHECK(parse_graph6(">>graph6<<Bw") == complete(3));
    CHECK(parse_graph6("Bw\n") == complete(3));
    CHECK(parse_graph6("Bw \r\n") == complete(3));
}

TEST_CASE("graph6 diagnostics carry offset and kind") {
    {
        const auto d = diagnostic_of([] { parse_graph6(">>graph5<<Bw"); });
        CHECK(d.kind == ParseErrorKind::BadHeader);
        CHECK(d.byte_offset == 0);
    }
    {
        const auto d = diagnostic_of([] { parse_graph6(""); });
        CHECK(d.kind == ParseErrorKind::BadSizeByte);
    }
    {
        // 126 introduces the long form, which this short-form codec rejects.
        const auto d = diagnostic_of([] { parse_graph6("~??"); });
        CHECK(d.kind == ParseErrorKind::BadSizeByte);
        CHECK(d.byte_offset == 0);
    }
    {
        const auto d = diagnostic_of([] { parse_graph6("\x20w"); });
        CHECK(d.kind == ParseErrorKind::BadSizeByte);
    }
    {
        const auto d = diagnostic_of([] { parse_graph6("B"); });
        CHECK(d.kind == ParseErrorKind::TruncatedBits);
        CHECK(d.byte_offset == 1);  // where the missing body byte should start
    }
    {
        const auto d = diagnostic_of([] { parse_graph6("B\x1f"); });
        CHECK(d.kind == ParseErrorKind::CharOutOfRange);
        CHECK(d.byte_offset == 1);
    }
    {
        const auto d = diagnostic_of([] { parse_graph6("Bw junk"); });
        CHECK(d.kind == ParseErrorKind::CharOutOfRange);
        CHECK(d.byte_offset == 3);
    }
}

TEST_CASE("graph6 writer refuses more than 62 vertices") {
    CHECK_NOTHROW(write_graph6(edgeless(62)));
    CHECK_THROWS_AS(write_graph6(edgeless(63)), TooLargeError);
}

TEST_CASE("graph6 round trip over every labeled graph up to four vertices") {
    for (const Graph& g : testsupport::all_labeled_graphs_up_to(0, 4)) {
        const std::string encoded = write_graph6(g);
        CHECK(parse_graph6(encoded) == g);
    }
}

TEST_CASE("graph6 round trip over seeded graphs up to twenty vertices") {
    CorpusSpec spec;
    spec.n_min = 1;
    spec.n_max = 20;
    spec.samples = 100;
    spec.seed = 7;
    GraphSampler sampler(spec);
    for (int i = 0; i < 100; ++i) {
        const Graph g = sampler.next_graph();
        CHECK(parse_graph6(write_graph6(g)) == g);
    }
}

TEST_CASE("graph6 line parser skips blanks and reports absolute offsets") {
    const auto graphs = parse_graph6_lines("Bw\n\n@\nCh\n");
    REQUIRE(graphs.size() == 3);
    CHECK(graphs[0] == complete(3));
    CHECK(graphs[1] == edgeless(1));
    CHECK(graphs[2] == path(4));

    const auto d = diagnostic_of([] { parse_graph6_lines("Bw\nB\n"); });
    CHECK(d.kind == ParseErrorKind::TruncatedBits);
    CHECK(d.byte_offset == 4);  // the truncated record starts at byte 3
}

TEST_CASE("edge list happy path with comments and CRLF") {
    const Graph g = parse_edge_list("# a triangle plus a spare vertex\r\n4\r\n0 1\r\n1 2\r\n0 2\r\n");
    CHECK(g == Graph(4, {{0, 1}, {1, 2}, {0, 2}}));
    CHECK(parse_edge_list("0\n").order() == 0);
    CHECK(parse_edge_list("  3  \n\n # comment\n").order() == 3);
}

TEST_CASE("edge list diagnostics") {
    {
        const auto d = diagnostic_of([] { parse_edge_list(""); });
        CHECK(d.kind == ParseErrorKind::BadEdgeLine);
    }
    {
        const auto d = diagnostic_of([] { parse_edge_list("x\n"); });
        CHECK(d.kind == ParseErrorKind::BadEdgeLine);
    }
    {
        const auto d = diagnostic_of([] { parse_edge_list("-3\n"); });
        CHECK(d.kind == ParseErrorKind::BadEdgeLine);
    }
    {
        const auto d = diagnostic_of([] { parse_edge_list("3\n0 1 2\n"); });
        CHECK(d.kind == ParseErrorKind::BadEdgeLine);
        CHECK(d.byte_offset == 2);
    }
    {
        const auto d = diagnostic_of([] { parse_edge_list("3\n0 3\n"); });
        CHECK(d.kind == ParseErrorKind::OutOfRange);
    }
    {
        const auto d = diagnostic_of([] { parse_edge_list("3\n1 1\n"); });
        CHECK(d.kind == ParseErrorKind::SelfLoop);
    }
    {
        const auto d = diagnostic_of([] { parse_edge_list("3\n0 1\n1 0\n"); });
        CHECK(d.kind == ParseErrorKind::Duplicate);
        CHECK(d.byte_offset == 6);
    }
    {
        const auto d = diagnostic_of([] { parse_edge_list("2000000\n"); });
        CHECK(d.kind == ParseErrorKind::BadEdgeLine);
    }
}

TEST_CASE("edge list writer round trips") {
    const Graph g(5, {{0, 4}, {1, 2}});
    CHECK(write_edge_list(g) == "5\n0 4\n1 2\n");
    CHECK(parse_edge_list(write_edge_list(g)) == g);
    CHECK(write_edge_list(edgeless(0)) == "0\n");
    for (const Graph& sample : testsupport::all_labeled_graphs(4))
        CHECK(parse_edge_list(write_edge_list(sample)) == sample);
}

TEST_CASE("both formats describe the same graph") {
    CorpusSpec spec;
    spec.n_min = 1;
    spec.n_max = 16;
    spec.seed = 8;
    GraphSampler sampler(spec);
    for (int i = 0; i < 60; ++i) {
        const Graph g = sampler.next_graph();
        CHECK(parse_graph6(write_graph6(g)) == parse_edge_list(write_edge_list(g)));
    }
}
