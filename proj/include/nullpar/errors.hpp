#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nullpar {

enum class Errc {
  parse,          // malformed text (expression or WalkerData file)
  index_range,    // coordinate index outside 1..n
  evaluation,     // division by zero / non-finite value at a point
  degenerate,     // metric determinant below the degeneracy floor
  rank,           // spanning set not of full rank
  invariant,      // WalkerData / partial-data invariant violated
  inclusion,      // nested subspaces do not nest
  range,          // integer parameter out of range (n, r, ...)
  inconsistent,   // partial pairing pieces disagree on the overlap
  unsupported,    // input outside the supported class
  io,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Syntax error at a byte offset of the parsed text.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(Errc::parse, what + " at byte offset " + std::to_string(offset)),
        offset_(offset),
        detail_(what) {}
  std::size_t offset() const noexcept { return offset_; }
  /// Message without the offset suffix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t offset_;
  std::string detail_;
};

}  // namespace nullpar
