#pragma once

// Text formats:
//   tournament <n>            then one "<u> <v>" line per unordered pair (u->v)
//   colouring <n> <k>         then one "<u> <v> <c>" line per edge
// Parsing is strict: missing or duplicate pairs are errors.

#include <stdexcept>
#include <string>

#include "monopath/core.hpp"

namespace monopath {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string render_tournament(const Tournament& t);
Tournament parse_tournament(const std::string& text);

std::string render_colouring(const EdgeColouring& col);
EdgeColouring parse_colouring(const std::string& text);
/// As above, additionally requiring every edge to match `t`'s orientation.
EdgeColouring parse_colouring(const std::string& text, const Tournament& t);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace monopath
