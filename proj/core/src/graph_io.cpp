#include "mwis/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <system_error>
#include <unordered_map>

namespace mwis {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

std::string save(const WeightedGraph& g) {
  std::ostringstream out;
  out << g.size() << ' ' << g.edge_count() << '\n';
  for (NodeIndex v = 0; v < g.size(); ++v) out << g.id(v) << ' ' << g.weight(v) << '\n';
  for (auto [u, v] : g.edges()) out << g.id(u) << ' ' << g.id(v) << '\n';
  return out.str();
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Returns the next non-blank line, or nullopt at end of input.
  std::optional<std::string_view> next() {
    while (pos_ < text_.size()) {
      const std::size_t end = std::min(text_.find('\n', pos_), text_.size());
      std::string_view line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++line_no_;
      if (line.find_first_not_of(" \t\r") != std::string_view::npos) return line;
    }
    return std::nullopt;
  }

  std::size_t line() const { return line_no_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

// Parses exactly two integer fields from a line.
template <typename A, typename B>
std::pair<A, B> two_fields(std::string_view line, std::size_t line_no, const char* what) {
  A a{};
  B b{};
  const char* p = line.data();
  const char* end = line.data() + line.size();
  auto skip = [&] {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
  };
  skip();
  auto r1 = std::from_chars(p, end, a);
  if (r1.ec != std::errc{}) throw ParseError(line_no, std::string("expected ") + what);
  p = r1.ptr;
  skip();
  auto r2 = std::from_chars(p, end, b);
  if (r2.ec != std::errc{}) throw ParseError(line_no, std::string("expected ") + what);
  p = r2.ptr;
  skip();
  if (p != end) throw ParseError(line_no, std::string("trailing text after ") + what);
  return {a, b};
}

}  // namespace

WeightedGraph load(std::string_view text) {
  LineReader reader(text);
  auto header = reader.next();
  if (!header) throw ParseError(reader.line() + 1, "missing header \"n m\"");
  auto [n, m] = two_fields<std::uint64_t, std::uint64_t>(*header, reader.line(), "header \"n m\"");

  std::vector<NodeId> ids;
  std::vector<Weight> weights;
  ids.reserve(n);
  weights.reserve(n);
  std::unordered_map<NodeId, NodeIndex> index;
  for (std::uint64_t i = 0; i < n; ++i) {
    auto line = reader.next();
    if (!line) throw ParseError(reader.line() + 1, "expected " + std::to_string(n) + " node lines");
    auto [id, w] = two_fields<NodeId, Weight>(*line, reader.line(), "\"id weight\"");
    if (!index.emplace(id, static_cast<NodeIndex>(i)).second)
      throw ParseError(reader.line(), "duplicate node id " + std::to_string(id));
    ids.push_back(id);
    weights.push_back(w);
  }

  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    auto line = reader.next();
    if (!line) throw ParseError(reader.line() + 1, "expected " + std::to_string(m) + " edge lines");
    auto [a, b] = two_fields<NodeId, NodeId>(*line, reader.line(), "\"u v\"");
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      throw ParseError(reader.line(), "edge references unknown id " +
                                          std::to_string(ia == index.end() ? a : b));
    }
    edges.emplace_back(ia->second, ib->second);
  }
  if (reader.next()) throw ParseError(reader.line(), "unexpected content after edge list");
  return WeightedGraph(std::move(ids), std::move(weights), edges);
}

WeightedGraph load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open graph file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load(buffer.str());
}

void save_file(const WeightedGraph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write graph file " + path);
  out << save(g);
}

}  // namespace mwis
