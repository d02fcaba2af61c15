#include "ureq/graph_io.hpp"

#include "ureq/error.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

namespace ureq {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

// Splits a line into whitespace separated integer tokens.
std::vector<long long> read_ints(std::string_view line, std::size_t line_no)
{
    std::vector<long long> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        if (i == line.size())
            break;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
            ++j;
        std::string_view tok = line.substr(i, j - i);
        long long value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw ParseError(line_no, "not an integer: '" + std::string(tok) + "'");
        out.push_back(value);
        i = j;
    }
    return out;
}

} // namespace

Graph parse_edge_list(std::string_view text)
{
    std::optional<int> order;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        auto ints = read_ints(line, line_no);
        if (!order) {
            if (ints.size() != 1)
                throw ParseError(line_no, "expected the vertex count on its own line");
            if (ints[0] < 0 || ints[0] > kGraph6MaxOrder)
                throw ParseError(line_no, "vertex count out of range");
            order = static_cast<int>(ints[0]);
            continue;
        }
        if (ints.size() != 2)
            throw ParseError(line_no, "expected two vertex ids");
        for (long long x : ints)
            if (x < 0 || x >= *order)
                throw ParseError(line_no, "vertex id " + std::to_string(x) + " out of range [0, " +
                                              std::to_string(*order) + ")");
        if (ints[0] == ints[1])
            throw ParseError(line_no, "self-loop at vertex " + std::to_string(ints[0]));
        edges.emplace_back(static_cast<Vertex>(ints[0]), static_cast<Vertex>(ints[1]));
    }
    if (!order)
        throw ParseError(line_no, "missing vertex count");
    return Graph::from_edges(*order, edges);
}

std::string to_edge_list(const Graph& g)
{
    std::ostringstream out;
    out << g.order() << '\n';
    for (const Edge& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Graph parse_graph6(std::string_view bytes)
{
    bytes = trim(bytes);
    if (bytes.starts_with(kGraph6Header))
        bytes.remove_prefix(kGraph6Header.size());
    if (bytes.empty())
        throw FormatError("graph6: empty input");
    for (char c : bytes)
        if (c < 63 || c > 126)
            throw FormatError("graph6: byte " + std::to_string(static_cast<int>(static_cast<unsigned char>(c))) +
                              " outside [63,126]");

    auto value = [&](std::size_t i) { return static_cast<int>(bytes[i]) - 63; };
    std::size_t pos = 0;
    long long n = 0;
    if (bytes[0] != '~') {
        n = value(0);
        pos = 1;
    } else {
        if (bytes.size() >= 2 && bytes[1] == '~')
            throw FormatError("graph6: orders above " + std::to_string(kGraph6MaxOrder) + " are not supported");
        if (bytes.size() < 4)
            throw FormatError("graph6: truncated size header");
        n = (static_cast<long long>(value(1)) << 12) | (value(2) << 6) | value(3);
        if (n < 63)
            throw FormatError("graph6: non-canonical size header");
        pos = 4;
    }

    const unsigned long long bit_count = static_cast<unsigned long long>(n) * static_cast<unsigned long long>(n - (n > 0)) / 2;
    const std::size_t body_bytes = static_cast<std::size_t>((bit_count + 5) / 6);
    if (bytes.size() - pos < body_bytes)
        throw FormatError("graph6: truncated adjacency payload");
    if (bytes.size() - pos > body_bytes)
        throw FormatError("graph6: trailing bytes after adjacency payload");

    std::vector<Edge> edges;
    unsigned long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = value(pos + static_cast<std::size_t>(bit / 6));
            if (byte & (1 << (5 - static_cast<int>(bit % 6))))
                edges.emplace_back(i, j);
        }
    for (; bit < body_bytes * 6ULL; ++bit) {
        int byte = value(pos + static_cast<std::size_t>(bit / 6));
        if (byte & (1 << (5 - static_cast<int>(bit % 6))))
            throw FormatError("graph6: nonzero padding bits");
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g)
{
    const int n = g.order();
    if (n > kGraph6MaxOrder)
        throw FormatError("graph6: order too large");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

GraphFormat detect_format(std::string_view text)
{
    text = trim(text);
    if (!text.empty() && (std::isdigit(static_cast<unsigned char>(text.front())) || text.front() == '#'))
        return GraphFormat::EdgeList;
    return GraphFormat::Graph6;
}

Graph parse_graph(std::string_view text, GraphFormat format)
{
    if (format == GraphFormat::EdgeList)
        return parse_edge_list(text);
    return parse_graph6(text);
}

Graph parse_graph(std::string_view text)
{
    return parse_graph(text, detect_format(text));
}

} // namespace ureq
