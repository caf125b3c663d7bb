#include "forcing/graph_io.hpp"

#include <sstream>

namespace forcing {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

bool printable(char c)
{
    return c >= kBias && c <= kBias + 63;
}

} // namespace

Graph parse_graph6(std::string_view text)
{
    std::size_t pos = 0;
    if (text.starts_with(kHeader))
        pos = kHeader.size();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);

    if (pos >= text.size())
        throw ParseError("graph6: missing size byte", pos);

    int n = 0;
    if (text[pos] == '~') {
        if (pos + 1 < text.size() && text[pos + 1] == '~')
            throw ParseError("graph6: eight-byte size form is not supported", pos);
        if (pos + 4 > text.size())
            throw ParseError("graph6: truncated size field", text.size());
        for (std::size_t i = pos + 1; i < pos + 4; ++i) {
            if (!printable(text[i]))
                throw ParseError("graph6: bad size byte", i);
            n = (n << 6) | (text[i] - kBias);
        }
        pos += 4;
    } else {
        if (!printable(text[pos]))
            throw ParseError("graph6: bad size byte", pos);
        n = text[pos] - kBias;
        pos += 1;
    }
    if (n > Graph::kMaxOrder)
        throw ParseError("graph6: order " + std::to_string(n) + " exceeds 64", pos - 1);

    const std::size_t bit_count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t byte_count = (bit_count + 5) / 6;
    if (text.size() - pos < byte_count)
        throw ParseError("graph6: payload too short", text.size());

    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            const std::size_t at = pos + bit / 6;
            const char c = text[at];
            if (!printable(c))
                throw ParseError("graph6: non-printable payload byte", at);
            if (((c - kBias) >> (5 - bit % 6)) & 1)
                edges.emplace_back(i, j);
        }
    if (byte_count > 0) {
        const std::size_t last = pos + byte_count - 1;
        if (!printable(text[last]))
            throw ParseError("graph6: non-printable payload byte", last);
        const int pad = static_cast<int>(byte_count * 6 - bit_count);
        if (((text[last] - kBias) & ((1 << pad) - 1)) != 0)
            throw ParseError("graph6: nonzero padding bits", last);
    }
    if (pos + byte_count != text.size())
        throw ParseError("graph6: trailing bytes after payload", pos + byte_count);
    return Graph(n, edges);
}

std::string encode_graph6(const Graph& g)
{
    const int n = g.order();
    if (n > Graph::kMaxOrder)
        throw std::invalid_argument("graph6: order exceeds supported size");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

Graph parse_edge_list(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    auto next_content_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                return true;
        }
        return false;
    };

    if (!next_content_line())
        throw ParseError("edge list: missing header line", line_no + 1);
    int n = 0;
    int m = 0;
    {
        std::istringstream header(line);
        std::string extra;
        if (!(header >> n >> m) || (header >> extra) || n < 0 || m < 0)
            throw ParseError("edge list: header must be \"n m\"", line_no);
    }
    if (n > Graph::kMaxOrder)
        throw ParseError("edge list: order exceeds 64", line_no);
    std::vector<Edge> edges;
    for (int e = 0; e < m; ++e) {
        if (!next_content_line())
            throw ParseError("edge list: expected " + std::to_string(m) + " edges", line_no + 1);
        std::istringstream row(line);
        int u = 0;
        int v = 0;
        std::string extra;
        if (!(row >> u >> v) || (row >> extra))
            throw ParseError("edge list: edge line must be \"u v\"", line_no);
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw ParseError("edge list: invalid edge", line_no);
        edges.emplace_back(u, v);
    }
    if (next_content_line())
        throw ParseError("edge list: trailing content", line_no);
    return Graph(n, edges);
}

std::string encode_edge_list(const Graph& g)
{
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

} // namespace forcing
