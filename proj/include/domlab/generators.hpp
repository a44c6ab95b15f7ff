#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "domlab/graph.hpp"

namespace domlab {

/// Seeded engine with a portable output sequence (mt19937_64 is fully specified).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound);
    /// True with probability p (53-bit resolution).
    bool bernoulli(double p);

    template <class T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

/// Connected simple 3-regular graph by the pairing model; any loop,
/// multi-edge or disconnected outcome triggers a fresh pairing.
/// Throws std::invalid_argument for odd n or n < 4.
Graph random_cubic(int n, std::uint64_t seed);

/// G(n, p) with edges drawn in lexicographic order.
Graph random_gnp(int n, double p, std::uint64_t seed);

/// Random graph with maximum degree at most `max_degree`: `attempts` random
/// vertex pairs are proposed and kept when both endpoints have room.
Graph random_bounded_degree(int n, int max_degree, int attempts, std::uint64_t seed);

/// Named fixtures. Vertex numbering:
///   petersen   outer cycle 0..4, spokes i-(i+5), inner pentagram 5-7-9-6-8
///   k<n>       complete graph (n != 13)
///   k13, claw  star with center 0 and leaves 1..3
///   c<n>       cycle 0-1-...-(n-1)-0, n >= 3
///   p<n>       path 0-1-...-(n-1), n >= 1
///   prism      triangles 0-1-2 and 3-4-5, matching i-(i+3)
///   cube       3-cube, i adjacent to i xor 2^k
///   k33        parts {0,1,2} and {3,4,5}
///   wheel<n>   hub 0 on rim cycle 1..n
///   double_star  centers 0-1, leaves 2,3 on 0 and 4,5 on 1
///   theta(a,b,c) hubs 0 and 1 joined by paths of a, b, c edges; interior
///                vertices numbered path by path from hub 0 side
/// Throws std::invalid_argument for unknown names.
Graph named_graph(std::string_view name);

/// True when `name` is recognized by named_graph.
bool is_named_graph(std::string_view name);

}  // namespace domlab
