#include "domlab/generators.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <optional>

#include "domlab/connectivity.hpp"

namespace domlab {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

bool Rng::bernoulli(double p) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return u < p;
}

Graph random_cubic(int n, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("cubic graphs need an even order >= 4, got " + std::to_string(n));
    Rng rng(seed);
    std::vector<Vertex> points(static_cast<std::size_t>(3 * n));
    while (true) {
        for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<Vertex>(i / 3);
        rng.shuffle(points);
        std::vector<Edge> edges;
        bool simple = true;
        for (std::size_t i = 0; i < points.size() && simple; i += 2) {
            if (points[i] == points[i + 1]) simple = false;
            edges.emplace_back(points[i], points[i + 1]);
        }
        if (!simple) continue;
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
        Graph g = Graph::from_edges(n, edges);
        if (is_connected(g)) return g;
    }
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph random_bounded_degree(int n, int max_degree, int attempts, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<Edge> edges;
    for (int k = 0; k < attempts && n >= 2; ++k) {
        auto u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        auto v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        if (u == v) continue;
        Edge e(u, v);
        if (deg[static_cast<std::size_t>(u)] >= max_degree || deg[static_cast<std::size_t>(v)] >= max_degree) continue;
        if (std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
        edges.push_back(e);
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    std::sort(edges.begin(), edges.end());
    return Graph::from_edges(n, edges);
}

namespace {

std::optional<int> parse_int(std::string_view s) {
    int value = 0;
    if (s.empty()) return std::nullopt;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

Graph cycle(int n) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph path(int n) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph complete(int n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph theta(int a, int b, int c) {
    std::vector<int> lengths{a, b, c};
    if (std::count(lengths.begin(), lengths.end(), 1) > 1 || *std::min_element(lengths.begin(), lengths.end()) < 1)
        throw std::invalid_argument("theta needs path lengths >= 1 with at most one of length 1");
    std::vector<Edge> edges;
    Vertex next = 2;
    for (int len : lengths) {
        Vertex prev = 0;
        for (int k = 1; k < len; ++k) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, 1);
    }
    std::sort(edges.begin(), edges.end());
    return Graph::from_edges(next, edges);
}

std::optional<Graph> lookup(std::string_view name) {
    if (name == "petersen") {
        return Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7},
                                      {3, 8}, {4, 9}, {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
    }
    if (name == "k13" || name == "claw") return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    if (name == "prism") return Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
    if (name == "k33") {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < 3; ++u)
            for (Vertex v = 3; v < 6; ++v) edges.emplace_back(u, v);
        return Graph::from_edges(6, edges);
    }
    if (name == "cube") {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < 8; ++u)
            for (int k = 0; k < 3; ++k)
                if (u < (u ^ (1 << k))) edges.emplace_back(u, u ^ (1 << k));
        std::sort(edges.begin(), edges.end());
        return Graph::from_edges(8, edges);
    }
    if (name == "double_star") return Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
    if (name.starts_with("wheel")) {
        auto rim = parse_int(name.substr(5));
        if (!rim || *rim < 3) return std::nullopt;
        std::vector<Edge> edges;
        for (Vertex i = 1; i <= *rim; ++i) {
            edges.emplace_back(0, i);
            edges.emplace_back(i, i % *rim + 1);
        }
        return Graph::from_edges(*rim + 1, edges);
    }
    if (name.starts_with("theta(") && name.ends_with(")")) {
        std::string_view body = name.substr(6, name.size() - 7);
        std::vector<int> parts;
        while (true) {
            auto comma = body.find(',');
            auto value = parse_int(body.substr(0, comma));
            if (!value) return std::nullopt;
            parts.push_back(*value);
            if (comma == std::string_view::npos) break;
            body.remove_prefix(comma + 1);
        }
        if (parts.size() != 3) return std::nullopt;
        return theta(parts[0], parts[1], parts[2]);
    }
    if (name.size() >= 2) {
        auto count = parse_int(name.substr(1));
        if (!count) return std::nullopt;
        switch (name[0]) {
            case 'k':
                if (*count >= 0) return complete(*count);
                break;
            case 'c':
                if (*count >= 3) return cycle(*count);
                break;
            case 'p':
                if (*count >= 1) return path(*count);
                break;
            default:
                break;
        }
    }
    return std::nullopt;
}

}  // namespace

Graph named_graph(std::string_view name) {
    if (auto g = lookup(name)) return *g;
    throw std::invalid_argument("unknown graph name: " + std::string(name));
}

bool is_named_graph(std::string_view name) {
    try {
        return lookup(name).has_value();
    } catch (const std::invalid_argument&) {
        return false;
    }
}

}  // namespace domlab
