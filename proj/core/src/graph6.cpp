#include "domlab/graph6.hpp"

#include <unistd.h>

#include <atomic>
#include <fstream>
#include <istream>
#include <sstream>
#include <system_error>

namespace domlab {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' || text.back() == '\t'))
    text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("graph6: empty input");
  for (char c : text) {
    const auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) throw Graph6Error("graph6: byte " + std::to_string(b) + " outside 63..126");
  }
  if (text.front() == '~') throw Graph6Error("graph6: orders above 62 are not supported");
  const int n = static_cast<unsigned char>(text.front()) - kBias;
  if (n == 0) throw Graph6Error("graph6: order 0 is not supported");

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t groups = (bits + 5) / 6;
  const std::string_view body = text.substr(1);
  if (body.size() < groups) throw Graph6Error("graph6: truncated edge section");
  if (body.size() > groups) throw Graph6Error("graph6: trailing bytes after edge section");

  Graph g(n);
  std::size_t k = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++k) {
      const int group = static_cast<unsigned char>(body[k / 6]) - kBias;
      if ((group >> (5 - static_cast<int>(k % 6))) & 1) g.add_edge(u, v);
    }
  }
  if (bits % 6 != 0) {
    const int last = static_cast<unsigned char>(body.back()) - kBias;
    if (last & ((1 << (6 - static_cast<int>(bits % 6))) - 1)) throw Graph6Error("graph6: nonzero padding bits");
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(kBias + n));
  int acc = 0;
  int filled = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kBias + (acc << (6 - filled))));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = line;
    if (lineno > 1 && view.starts_with(kHeader)) {
      throw Graph6Error("graph6: header allowed on the first line only (line " + std::to_string(lineno) + ")");
    }
    if (view.starts_with(kHeader)) view.remove_prefix(kHeader.size());
    while (!view.empty() && (view.back() == '\r' || view.back() == ' ')) view.remove_suffix(1);
    if (view.empty()) continue;
    try {
      out.push_back(parse_graph6(view));
    } catch (const Graph6Error& e) {
      throw Graph6Error(std::string(e.what()) + " (line " + std::to_string(lineno) + ")");
    }
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Graph6Error("graph6: cannot open " + path.string());
  return read_graph6_stream(in);
}

void write_graph6_file_atomic(const std::filesystem::path& path, const std::vector<Graph>& graphs) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  // Unique per process and per call, so concurrent writers never share a temp file.
  static std::atomic<unsigned> counter{0};
  const std::filesystem::path tmp =
      path.string() + ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter.fetch_add(1));
  try {
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) throw Graph6Error("graph6: cannot write " + tmp.string());
      for (const Graph& g : graphs) out << to_graph6(g) << '\n';
      out.flush();
      if (!out) throw Graph6Error("graph6: write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
  } catch (...) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw;
  }
}

}  // namespace domlab
