// Text cache for S: a header line carrying the group-table hash, then one
// line per seven-tuple of seven golden numbers "a/b,c/d" joined by ';',
// sorted, LF-terminated.
#pragma once

#include <optional>
#include <string>

#include "icosa/enumerate.hpp"

namespace ico {

std::string format_cache(const GroupTable& G, const TripleSet& S);
// Returns nullopt if the header names a different group table; throws
// CacheError if the file is malformed.
std::optional<TripleSet> parse_cache(const GroupTable& G, const std::string& text);

void write_cache(const std::string& path, const GroupTable& G, const TripleSet& S);
// nullopt if the file is missing or stale.
std::optional<TripleSet> read_cache(const std::string& path, const GroupTable& G);

}  // namespace ico
