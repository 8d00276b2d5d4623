#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permchar
{

// Malformed cycle notation or group file. line() is 1-based, 0 when unknown.
class ParseError : public std::runtime_error
{
public:
  explicit ParseError(const std::string &what, std::size_t line = 0)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
      line_(line)
  {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

// Group order exceeds the configured bound for element-level algorithms.
class BoundExceeded : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Subgroup enumeration cannot be certified complete for this group.
class EnumerationIncomplete : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace permchar
