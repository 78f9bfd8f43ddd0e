#include "fanol2/textio.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "fanol2/error.hpp"

namespace fanol2 {

namespace {

// Dense tables are quadratic (cubic/64 for 3-graphs) in n.
constexpr std::uint64_t kMaxVertices3 = 512;
constexpr std::uint64_t kMaxVerticesGraph = 4096;
constexpr std::uint64_t kMaxVerticesMulti = 1024;

struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text)
{
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r'))
                ++i;
            std::size_t j = i;
            while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r')
                ++j;
            if (j > i)
                line.tokens.push_back(raw.substr(i, j - i));
            i = j;
        }
        if (!line.tokens.empty())
            lines.push_back(std::move(line));
        if (end == text.size())
            break;
        pos = end + 1;
    }
    return lines;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line, const char* what)
{
    std::uint64_t value = 0;
    const auto* first = tok.data();
    const auto* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (tok.empty() || ec != std::errc() || ptr != last)
        throw ParseError(line, std::string("expected a non-negative integer for ") + what + ", got '" +
                                   std::string(tok) + "'");
    return value;
}

void expect_count(const Line& l, std::size_t count, const char* shape)
{
    if (l.tokens.size() != count)
        throw ParseError(l.number, std::string("expected '") + shape + "', got " + std::to_string(l.tokens.size()) +
                                       " field(s)");
}

const Line& header(const std::vector<Line>& lines, std::string_view keyword)
{
    if (lines.empty())
        throw ParseError(1, "empty input, expected '" + std::string(keyword) + "' header");
    const Line& h = lines.front();
    if (h.tokens.front() != keyword)
        throw ParseError(h.number, "expected header keyword '" + std::string(keyword) + "', got '" +
                                       std::string(h.tokens.front()) + "'");
    return h;
}

std::size_t parse_vertex_count(const Line& h, std::uint64_t cap)
{
    const std::uint64_t n = parse_uint(h.tokens[1], h.number, "vertex count");
    if (n > cap)
        throw ParseError(h.number, "vertex count " + std::to_string(n) + " exceeds the supported maximum " +
                                       std::to_string(cap));
    return static_cast<std::size_t>(n);
}

Vertex parse_vertex(std::string_view tok, std::size_t line, std::size_t n)
{
    const std::uint64_t v = parse_uint(tok, line, "vertex");
    if (v >= n)
        throw ParseError(line, "vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
    return static_cast<Vertex>(v);
}

} // namespace

FileKind sniff_kind(std::string_view text)
{
    const auto lines = tokenize(text);
    if (lines.empty())
        throw ParseError(1, "empty input, expected a '3graph', 'graph' or 'mgraph' header");
    const std::string_view kw = lines.front().tokens.front();
    if (kw == "3graph")
        return FileKind::Hyper3;
    if (kw == "graph")
        return FileKind::Graph;
    if (kw == "mgraph")
        return FileKind::Multigraph;
    throw ParseError(lines.front().number, "unknown header keyword '" + std::string(kw) + "'");
}

Uniform3Graph parse_3graph(std::string_view text)
{
    const auto lines = tokenize(text);
    const Line& h = header(lines, "3graph");
    expect_count(h, 2, "3graph <n>");
    const std::size_t n = parse_vertex_count(h, kMaxVertices3);
    std::vector<Triple> edges;
    std::set<Triple> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        expect_count(l, 3, "u v w");
        const Vertex u = parse_vertex(l.tokens[0], l.number, n);
        const Vertex v = parse_vertex(l.tokens[1], l.number, n);
        const Vertex w = parse_vertex(l.tokens[2], l.number, n);
        if (!(u < v && v < w))
            throw ParseError(l.number, "edge vertices must be strictly increasing");
        const Triple t{u, v, w};
        if (!seen.insert(t).second)
            throw ParseError(l.number, "duplicate edge");
        edges.push_back(t);
    }
    return Uniform3Graph(n, edges);
}

SimpleGraph parse_graph(std::string_view text)
{
    const auto lines = tokenize(text);
    const Line& h = header(lines, "graph");
    expect_count(h, 2, "graph <n>");
    const std::size_t n = parse_vertex_count(h, kMaxVerticesGraph);
    SimpleGraph::Builder b(n);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        expect_count(l, 2, "u v");
        const Vertex u = parse_vertex(l.tokens[0], l.number, n);
        const Vertex v = parse_vertex(l.tokens[1], l.number, n);
        if (!(u < v))
            throw ParseError(l.number, "edge vertices must be strictly increasing");
        if (b.has_edge(u, v))
            throw ParseError(l.number, "duplicate edge");
        b.add_edge(u, v);
    }
    return std::move(b).build();
}

MMultigraph parse_mgraph(std::string_view text)
{
    const auto lines = tokenize(text);
    const Line& h = header(lines, "mgraph");
    expect_count(h, 3, "mgraph <n> <m>");
    const std::size_t n = parse_vertex_count(h, kMaxVerticesMulti);
    const std::uint64_t m = parse_uint(h.tokens[2], h.number, "layer count");
    if (m == 0 || m > kMaxLayers)
        throw ParseError(h.number, "layer count must be in 1.." + std::to_string(kMaxLayers));
    MMultigraph::Builder b(n, static_cast<unsigned>(m));
    std::set<Pair> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        expect_count(l, 3, "u v c1,c2,...");
        const Vertex u = parse_vertex(l.tokens[0], l.number, n);
        const Vertex v = parse_vertex(l.tokens[1], l.number, n);
        if (!(u < v))
            throw ParseError(l.number, "pair vertices must be strictly increasing");
        if (!seen.insert(Pair{u, v}).second)
            throw ParseError(l.number, "duplicate pair");
        ColorSet colors = 0;
        std::uint64_t previous = 0;
        std::string_view list = l.tokens[2];
        while (true) {
            const std::size_t comma = list.find(',');
            const std::string_view tok = list.substr(0, comma);
            const std::uint64_t c = parse_uint(tok, l.number, "layer");
            if (c == 0 || c > m)
                throw ParseError(l.number, "layer " + std::to_string(c) + " out of range 1.." + std::to_string(m));
            if (c <= previous)
                throw ParseError(l.number, "layers must be strictly increasing");
            colors |= layer_bit(static_cast<unsigned>(c));
            previous = c;
            if (comma == std::string_view::npos)
                break;
            list.remove_prefix(comma + 1);
        }
        b.set_colors(u, v, colors);
    }
    return std::move(b).build();
}

AnyGraph parse_any(std::string_view text)
{
    switch (sniff_kind(text)) {
    case FileKind::Hyper3:
        return parse_3graph(text);
    case FileKind::Graph:
        return parse_graph(text);
    case FileKind::Multigraph:
        return parse_mgraph(text);
    }
    fail(ErrorCode::Internal, "unreachable file kind");
}

std::string format_3graph(const Uniform3Graph& h)
{
    std::ostringstream out;
    out << "3graph " << h.vertex_count() << '\n';
    for (const Triple& t : h.edges())
        out << t.a << ' ' << t.b << ' ' << t.c << '\n';
    return out.str();
}

std::string format_graph(const SimpleGraph& g)
{
    std::ostringstream out;
    out << "graph " << g.vertex_count() << '\n';
    for (const Pair& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

std::string format_mgraph(const MMultigraph& mg)
{
    std::ostringstream out;
    out << "mgraph " << mg.vertex_count() << ' ' << mg.layer_count() << '\n';
    for (Vertex u = 0; u < mg.vertex_count(); ++u)
        for (Vertex v = u + 1; v < mg.vertex_count(); ++v) {
            ColorSet c = mg.colors(u, v);
            if (c == 0)
                continue;
            out << u << ' ' << v << ' ';
            bool first = true;
            for (unsigned layer = 1; layer <= mg.layer_count(); ++layer)
                if (c & layer_bit(layer)) {
                    out << (first ? "" : ",") << layer;
                    first = false;
                }
            out << '\n';
        }
    return out.str();
}

std::string format_any(const AnyGraph& g)
{
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Uniform3Graph>)
                return format_3graph(x);
            else if constexpr (std::is_same_v<T, SimpleGraph>)
                return format_graph(x);
            else
                return format_mgraph(x);
        },
        g);
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(ErrorCode::Io, "cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        fail(ErrorCode::Io, "error while reading '" + path + "'");
    return buf.str();
}

void write_text_file(const std::string& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        fail(ErrorCode::Io, "cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out)
        fail(ErrorCode::Io, "error while writing '" + path + "'");
}

} // namespace fanol2
