#pragma once

// JSON serialization of search and scan reports. Keys are emitted in a fixed
// order so reports are byte-stable apart from the timing fields.

#include <string>

#include "fanol2/search.hpp"

namespace fanol2 {

std::string to_json(const SearchReport& r, int indent = 2);
std::string to_json(const Lemma51Report& r, int indent = 2);
std::string to_json(const S2Profile& r, int indent = 2);
std::string to_json(const AesReport& r, int indent = 2);
std::string to_json(const BipartiteScanReport& r, int indent = 2);

} // namespace fanol2
