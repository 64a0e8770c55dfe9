#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zagreb/graph.hpp"

namespace zagreb {

/// Input error carrying a 1-based line number for diagnostics.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// graph6: one printable-ASCII token per graph. Vertex counts up to 62 use a
/// single size byte (n+63); 63 and 64 use the '~' three-byte extension.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view token);

/// Edge-list text: "n m" header, then m lines "u v" with 0 <= u < v < n.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

enum class FileFormat { graph6, edge_list };

/// Reads every graph from a stream: one g6 token per line, or a single
/// edge-list document. Throws ParseError with the offending line number.
std::vector<Graph> read_graphs(std::istream& in, FileFormat format);

}  // namespace zagreb
