#pragma once

#include "homcount/errors.hpp"
#include "homcount/graph.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace homcount {

enum class ParseErrorKind {
    BadHeader,
    BadSizeByte,
    TruncatedBits,
    CharOutOfRange,
    BadEdgeLine,
    Duplicate,
    SelfLoop,
    OutOfRange,
};

std::string_view to_string(ParseErrorKind kind);

// byte_offset points at the offending byte; for truncated input it is the
// position where the missing byte was expected (== input size).
struct ParseDiagnostic {
    std::size_t byte_offset = 0;
    ParseErrorKind kind = ParseErrorKind::BadEdgeLine;
    std::string message;
};

class ParseError : public Error {
public:
    explicit ParseError(ParseDiagnostic d)
        : Error("offset " + std::to_string(d.byte_offset) + ": " + d.message),
          diag_(std::move(d)) {}
    const ParseDiagnostic& diagnostic() const { return diag_; }

private:
    ParseDiagnostic diag_;
};

// graph6 short form (n <= 62): size byte n+63, then the upper triangle of the
// adjacency matrix in column-major order (for column j = 1..n-1, rows
// i = 0..j-1), packed six bits per byte, most significant bit first, each byte
// offset by 63, padded with zero bits. An optional leading ">>graph6<<" header
// is accepted and stripped; trailing whitespace is tolerated.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// One graph6 record per line; blank lines are skipped. Diagnostics carry
// offsets into the whole input.
std::vector<Graph> parse_graph6_lines(std::string_view text);

// Line-oriented edge list: first significant line is the vertex count, every
// following one holds "u v". Lines starting with '#' are comments; blank
// lines are ignored; LF and CRLF both accepted.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

}  // namespace homcount
