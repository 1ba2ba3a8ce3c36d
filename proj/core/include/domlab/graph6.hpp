#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "domlab/graph.hpp"

namespace domlab {

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Decodes one graph6 line (short form, order <= 62). A leading ">>graph6<<"
/// header and trailing whitespace are tolerated.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Reads newline-separated graph6 lines; blank lines are skipped and the header
/// is accepted on the first line only.
std::vector<Graph> read_graph6_file(const std::filesystem::path& path);
std::vector<Graph> read_graph6_stream(std::istream& in);

/// Writes one graph6 line per graph via a temporary file renamed into place.
void write_graph6_file_atomic(const std::filesystem::path& path, const std::vector<Graph>& graphs);

}  // namespace domlab
