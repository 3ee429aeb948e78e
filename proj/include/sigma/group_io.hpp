#pragma once

#include <filesystem>
#include <string>

#include "sigma/finite_group.hpp"

namespace sigma {

/// Parse error carrying the 1-based line number of the offending line.
class GroupParseError : public std::runtime_error {
 public:
  GroupParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Group file format: first significant line is the degree; every further
/// non-empty line is one generator in disjoint-cycle notation with 0-based
/// points ("()" is the identity); lines starting with '#' are comments.
/// A file with a degree but no generators denotes the trivial group.
FiniteGroup parse_group(const std::string& text);
std::string format_group(const FiniteGroup& g);

FiniteGroup load_group(const std::filesystem::path& path);
void save_group(const FiniteGroup& g, const std::filesystem::path& path);

}  // namespace sigma
