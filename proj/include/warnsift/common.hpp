#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace warnsift {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input at a known position. `offset` is a byte offset for XML
/// input and a 1-based line number for Java sources (see `kind`).
class ParseError : public Error {
 public:
  enum class Position { ByteOffset, Line };

  ParseError(const std::string& what, std::size_t where, Position kind)
      : Error(what + (kind == Position::ByteOffset ? " (byte offset " : " (line ") +
              std::to_string(where) + ")"),
        where_(where),
        kind_(kind) {}

  std::size_t where() const noexcept { return where_; }
  Position kind() const noexcept { return kind_; }

 private:
  std::size_t where_;
  Position kind_;
};

}  // namespace warnsift
