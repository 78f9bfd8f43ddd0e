#pragma once

// Line-oriented text formats:
//   3graph <n>      then "u v w" per edge, u < v < w < n
//   graph <n>       then "u v" per edge, u < v < n
//   mgraph <n> <m>  then "u v c1,c2,..." per coloured pair, u < v < n,
//                   colours strictly increasing in 1..m
// Blank lines are ignored. Duplicate edges or pairs are rejected.

#include <string>
#include <string_view>
#include <variant>

#include "fanol2/hypercore.hpp"
#include "fanol2/multigraph.hpp"

namespace fanol2 {

enum class FileKind { Hyper3, Graph, Multigraph };

using AnyGraph = std::variant<Uniform3Graph, SimpleGraph, MMultigraph>;

/// Errors are ParseError carrying a 1-based line number.
Uniform3Graph parse_3graph(std::string_view text);
SimpleGraph parse_graph(std::string_view text);
MMultigraph parse_mgraph(std::string_view text);
/// Dispatches on the header keyword.
AnyGraph parse_any(std::string_view text);
FileKind sniff_kind(std::string_view text);

std::string format_3graph(const Uniform3Graph& h);
std::string format_graph(const SimpleGraph& g);
std::string format_mgraph(const MMultigraph& mg);
std::string format_any(const AnyGraph& g);

/// Throws Io on failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

} // namespace fanol2
