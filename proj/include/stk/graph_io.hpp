#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "stk/graph.hpp"

namespace stk {

// Malformed textual graph input.  `offset` is the byte position within the
// offending record.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// graph6: one graph per line, printable bytes 63..126.  The header encodes n
// (single byte for n <= 62, the longer 126-prefixed forms above that); the
// body packs the upper triangle column by column, six bits per byte,
// zero-padded.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& line);

// plain text edge list: first line "n m", then m lines "u v" (0-based)
std::string to_edge_list(const Graph& g);
Graph from_edge_list_text(const std::string& text);

// read every graph6 line from a stream (blank lines skipped)
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace stk
