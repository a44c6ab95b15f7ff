#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "domlab/graph.hpp"

namespace domlab {

/// Parse failure with the byte offset of the offending character.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(std::size_t offset, const std::string& what)
        : std::runtime_error("graph6 byte " + std::to_string(offset) + ": " + what), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Largest order handled by the 4-byte header form.
inline constexpr int kGraph6MaxOrder = 258047;

/// Decodes one graph6 line (no sparse6, no ">>graph6<<" header). A trailing
/// '\n' or "\r\n" is tolerated. Padding bits in the last byte are ignored.
Graph parse_graph6(std::string_view text);

/// Encodes with the 1-byte header for n <= 62 and the 4-byte form otherwise.
std::string encode_graph6(const Graph& g);

/// One graph per non-empty line; lines starting with '#' are skipped.
std::vector<std::string> read_graph6_lines(std::istream& in);

}  // namespace domlab
