#pragma once

#include <string>
#include <string_view>

#include "nullpar/walker.hpp"

namespace nullpar::walker {

// WalkerData text format:
//
//   walker n=4 r=1
//   A:
//   1; 0
//   0; 1
//   H:
//   x2
//   0
//   B:
//   x2^2 - x3^2
//
// One block row per line, entries separated by ';'. Blocks with no entries
// (A and H when n = 2r, H and B when r = 0) are omitted. Blank lines and
// lines starting with '#' are ignored.

/// Throws ParseError with the byte offset into `text` (and the line number in
/// the message) or Error{Errc::index_range}.
WalkerData parse_walker(std::string_view text);

/// Canonical text; parse_walker(format_walker(d)) reproduces d.
std::string format_walker(const WalkerData& data);

WalkerData load_walker(const std::string& path);
void save_walker(const WalkerData& data, const std::string& path);

}  // namespace nullpar::walker
