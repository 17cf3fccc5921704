#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mwis/graph.hpp"

namespace mwis {

/// Malformed graph text. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Text format:
//   line 1        "n m"
//   next n lines  "id weight"
//   next m lines  "u v"      (identifiers, not indices)
std::string save(const WeightedGraph& g);
WeightedGraph load(std::string_view text);

WeightedGraph load_file(const std::string& path);
void save_file(const WeightedGraph& g, const std::string& path);

}  // namespace mwis
