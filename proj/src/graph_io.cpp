#include <charconv>
#include <sstream>
#include <string>

#include "locgame/error.hpp"
#include "locgame/graph.hpp"

namespace locgame {

namespace {

constexpr int kGraph6Offset = 63;
constexpr int kGraph6Max = 126;
constexpr std::string_view kGraph6Header = ">>graph6<<";

void check_connected(const Graph& g, ParseOptions options)
{
    if (!options.allow_disconnected && !g.is_connected()) {
        throw ParseError("graph is disconnected");
    }
}

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

}  // namespace

Graph parse_edge_list(std::string_view text, ParseOptions options)
{
    std::vector<Edge> edges;
    int max_id = -1;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        int ids[2] = {0, 0};
        int count = 0;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
            if (i == line.size()) break;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
            std::string_view token = line.substr(i, j - i);
            int value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
                throw ParseError("line " + std::to_string(line_no) + ": not a non-negative integer: '" + std::string(token) + "'");
            }
            if (count == 2) throw ParseError("line " + std::to_string(line_no) + ": expected exactly two vertex ids");
            ids[count++] = value;
            i = j;
        }
        if (count != 2) throw ParseError("line " + std::to_string(line_no) + ": expected exactly two vertex ids");
        if (ids[0] == ids[1]) throw ParseError("line " + std::to_string(line_no) + ": loop at vertex " + std::to_string(ids[0]));
        edges.push_back({ids[0], ids[1]});
        max_id = std::max({max_id, ids[0], ids[1]});
        if (eol == text.size()) break;
    }
    if (edges.empty()) throw ParseError("edge list is empty");
    Graph g;
    try {
        g = Graph::from_edges(max_id + 1, edges);
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
    check_connected(g, options);
    return g;
}

std::string format_edge_list(const Graph& g)
{
    std::ostringstream out;
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Graph parse_graph6(std::string_view text, ParseOptions options)
{
    text = trim(text);
    if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
    if (text.empty()) throw ParseError("graph6: empty input");
    for (char c : text) {
        const int x = static_cast<unsigned char>(c);
        if (x < kGraph6Offset || x > kGraph6Max) throw ParseError("graph6: character out of range 63..126");
    }

    auto byte = [&](std::size_t i) { return static_cast<unsigned char>(text[i]) - kGraph6Offset; };
    long long n = 0;
    std::size_t pos = 0;
    if (byte(0) < 63) {
        n = byte(0);
        pos = 1;
    } else if (text.size() >= 2 && byte(1) < 63) {
        if (text.size() < 4) throw ParseError("graph6: bad length");
        n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    } else {
        if (text.size() < 8) throw ParseError("graph6: bad length");
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | byte(i);
        pos = 8;
    }
    if (n > 1'000'000) throw ParseError("graph6: vertex count too large");

    const long long bits = n * (n - 1) / 2;
    const std::size_t expected = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - pos != expected) throw ParseError("graph6: bad length");

    std::vector<Edge> edges;
    long long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int chunk = byte(pos + static_cast<std::size_t>(k / 6));
            if ((chunk >> (5 - k % 6)) & 1) edges.push_back({i, j});
        }
    }
    Graph g = Graph::from_edges(static_cast<int>(n), edges);
    check_connected(g, options);
    return g;
}

std::string encode_graph6(const Graph& g)
{
    const long long n = g.order();
    std::string out;
    if (n < 63) {
        out += static_cast<char>(n + kGraph6Offset);
    } else if (n <= 258047) {
        out += static_cast<char>(kGraph6Max);
        for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + kGraph6Offset);
    } else {
        out += static_cast<char>(kGraph6Max);
        out += static_cast<char>(kGraph6Max);
        for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + kGraph6Offset);
    }
    int chunk = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(chunk + kGraph6Offset);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out += static_cast<char>((chunk << (6 - filled)) + kGraph6Offset);
    return out;
}

}  // namespace locgame
