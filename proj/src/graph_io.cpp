#include "homcount/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

namespace homcount {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;
constexpr int kMaxShortForm = 62;

// Hard cap for edge-list vertex counts; keeps a typo from allocating gigabytes.
constexpr long long kMaxEdgeListOrder = 1'000'000;

[[noreturn]] void fail(std::size_t offset, ParseErrorKind kind, std::string message) {
    throw ParseError({offset, kind, std::move(message)});
}

bool is_space_byte(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

// Upper-triangle pairs in graph6 bit order: (0,1), (0,2), (1,2), (0,3), ...
std::vector<Edge> triangle_pairs(int n) {
    std::vector<Edge> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2);
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) pairs.emplace_back(i, j);
    return pairs;
}

}  // namespace

std::string_view to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::BadHeader: return "BadHeader";
        case ParseErrorKind::BadSizeByte: return "BadSizeByte";
        case ParseErrorKind::TruncatedBits: return "TruncatedBits";
        case ParseErrorKind::CharOutOfRange: return "CharOutOfRange";
        case ParseErrorKind::BadEdgeLine: return "BadEdgeLine";
        case ParseErrorKind::Duplicate: return "Duplicate";
        case ParseErrorKind::SelfLoop: return "SelfLoop";
        case ParseErrorKind::OutOfRange: return "OutOfRange";
    }
    return "?";
}

Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    if (!text.empty() && text.front() == '>') {
        if (text.substr(0, kHeader.size()) != kHeader)
            fail(0, ParseErrorKind::BadHeader, "expected \">>graph6<<\" header");
        pos = kHeader.size();
    }
    if (pos >= text.size())
        fail(pos, ParseErrorKind::BadSizeByte, "missing graph6 size byte");

    const unsigned char size_byte = static_cast<unsigned char>(text[pos]);
    if (size_byte == 126)
        fail(pos, ParseErrorKind::BadSizeByte,
             "long-form graph6 (more than 62 vertices) is not supported");
    if (size_byte < kBias || size_byte > kBias + kMaxShortForm)
        fail(pos, ParseErrorKind::BadSizeByte,
             "size byte " + std::to_string(size_byte) + " outside 63..125");
    const int n = size_byte - kBias;
    ++pos;

    const auto pairs = triangle_pairs(n);
    const std::size_t bits_needed = pairs.size();
    const std::size_t bytes_needed = (bits_needed + 5) / 6;

    std::vector<Edge> edges;
    for (std::size_t b = 0; b < bytes_needed; ++b, ++pos) {
        if (pos >= text.size())
            fail(text.size(), ParseErrorKind::TruncatedBits,
                 "record truncated: expected " + std::to_string(bytes_needed - b) +
                     " more body byte(s)");
        const unsigned char c = static_cast<unsigned char>(text[pos]);
        if (c < kBias || c > 126)
            fail(pos, ParseErrorKind::CharOutOfRange,
                 "body byte " + std::to_string(c) + " outside 63..126");
        const int value = c - kBias;
        for (int k = 0; k < 6; ++k) {
            const std::size_t idx = b * 6 + static_cast<std::size_t>(k);
            if (idx >= bits_needed) break;
            if ((value >> (5 - k)) & 1) edges.push_back(pairs[idx]);
        }
    }

    for (; pos < text.size(); ++pos)
        if (!is_space_byte(text[pos]))
            fail(pos, ParseErrorKind::CharOutOfRange,
                 "unexpected trailing byte after graph6 record");

    return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
    if (g.order() > kMaxShortForm)
        throw TooLargeError("graph6 short form cannot encode " + std::to_string(g.order()) +
                            " vertices (max 62)");
    const int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(n + kBias));

    const std::size_t bits = static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2;
    std::vector<bool> bitmap(bits, false);
    for (const auto& [i, j] : g.edges())
        bitmap[static_cast<std::size_t>(j) * (j - 1) / 2 + static_cast<std::size_t>(i)] = true;

    for (std::size_t b = 0; b < bits; b += 6) {
        int value = 0;
        for (int k = 0; k < 6; ++k) {
            value <<= 1;
            const std::size_t idx = b + static_cast<std::size_t>(k);
            if (idx < bits && bitmap[idx]) value |= 1;
        }
        out.push_back(static_cast<char>(value + kBias));
    }
    return out;
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
    std::vector<Graph> graphs;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        std::string_view line = text.substr(line_start, line_end - line_start);
        const bool blank = std::all_of(line.begin(), line.end(), is_space_byte);
        if (!blank) {
            try {
                graphs.push_back(parse_graph6(line));
            } catch (const ParseError& e) {
                ParseDiagnostic d = e.diagnostic();
                d.byte_offset += line_start;
                throw ParseError(std::move(d));
            }
        }
        if (line_end == text.size()) break;
        line_start = line_end + 1;
    }
    return graphs;
}

namespace {

bool parse_integer(std::string_view token, long long& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space_byte(line[i])) ++i;
        std::size_t start = i;
        while (i < line.size() && !is_space_byte(line[i])) ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    long long n = -1;
    std::set<Edge> seen;
    std::vector<Edge> edges;

    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        std::string_view line = text.substr(line_start, line_end - line_start);

        std::size_t first_sig = 0;
        while (first_sig < line.size() && is_space_byte(line[first_sig])) ++first_sig;
        const bool blank = first_sig == line.size();
        const bool comment = !blank && line[first_sig] == '#';

        if (!blank && !comment) {
            const auto tokens = split_tokens(line);
            if (n < 0) {
                if (tokens.size() != 1 || !parse_integer(tokens[0], n) || n < 0)
                    fail(line_start, ParseErrorKind::BadEdgeLine,
                         "expected a nonnegative vertex count on the first line");
                if (n > kMaxEdgeListOrder)
                    fail(line_start, ParseErrorKind::BadEdgeLine,
                         "vertex count exceeds the supported maximum of " +
                             std::to_string(kMaxEdgeListOrder));
            } else {
                long long u = 0, v = 0;
                if (tokens.size() != 2 || !parse_integer(tokens[0], u) ||
                    !parse_integer(tokens[1], v))
                    fail(line_start, ParseErrorKind::BadEdgeLine,
                         "expected two integers \"u v\"");
                if (u < 0 || u >= n)
                    fail(line_start, ParseErrorKind::OutOfRange,
                         "vertex " + std::to_string(u) + " out of range [0," +
                             std::to_string(n) + ")");
                if (v < 0 || v >= n)
                    fail(line_start, ParseErrorKind::OutOfRange,
                         "vertex " + std::to_string(v) + " out of range [0," +
                             std::to_string(n) + ")");
                if (u == v)
                    fail(line_start, ParseErrorKind::SelfLoop,
                         "self-loop at vertex " + std::to_string(u));
                Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
                if (!seen.insert(e).second)
                    fail(line_start, ParseErrorKind::Duplicate,
                         "edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                             "} listed twice");
                edges.push_back(e);
            }
        }
        if (line_end == text.size()) break;
        line_start = line_end + 1;
    }

    if (n < 0)
        fail(0, ParseErrorKind::BadEdgeLine, "missing vertex count line");
    return Graph(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order());
    out.push_back('\n');
    for (const auto& [u, v] : g.edges()) {
        out += std::to_string(u);
        out.push_back(' ');
        out += std::to_string(v);
        out.push_back('\n');
    }
    return out;
}

}  // namespace homcount
