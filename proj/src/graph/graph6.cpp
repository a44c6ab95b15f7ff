#include "domlab/graph6.hpp"

namespace domlab {

namespace {

constexpr int kOffset = 63;

int decode_byte(std::string_view text, std::size_t pos) {
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw Graph6Error(pos, "character " + std::to_string(c) + " outside 63..126");
    return c - kOffset;
}

std::string_view strip_line_end(std::string_view text) {
    if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    return text;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    text = strip_line_end(text);
    if (text.empty()) throw Graph6Error(0, "empty input");

    std::size_t pos = 0;
    int n = 0;
    if (text[0] == '~') {
        if (text.size() > 1 && text[1] == '~') throw Graph6Error(1, "8-byte order header unsupported");
        if (text.size() < 4) throw Graph6Error(text.size(), "truncated order header");
        for (pos = 1; pos < 4; ++pos) n = (n << 6) | decode_byte(text, pos);
        if (n < 63) throw Graph6Error(0, "non-canonical long header for n=" + std::to_string(n));
    } else {
        n = decode_byte(text, 0);
        pos = 1;
    }

    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t payload = (bits + 5) / 6;
    if (text.size() - pos < payload) throw Graph6Error(text.size(), "truncated bit vector");
    if (text.size() - pos > payload) throw Graph6Error(pos + payload, "trailing bytes after bit vector");

    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit) {
            const int byte = decode_byte(text, pos + bit / 6);
            if (byte & (1 << (5 - bit % 6))) edges.emplace_back(i, j);
        }
    }
    for (std::size_t k = pos; k < text.size(); ++k) decode_byte(text, k);
    return Graph::from_edges(n, edges);
}

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6MaxOrder) throw CapacityError("graph6 encoder supports n <= " + std::to_string(kGraph6MaxOrder));

    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kOffset));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
    }

    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kOffset));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
    return out;
}

std::vector<std::string> read_graph6_lines(std::istream& in) {
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        out.push_back(line);
    }
    return out;
}

}  // namespace domlab
