// Line-oriented text format for hypergraphs:
//
//   k 3
//   vertices 4
//   family triangular
//   set 0 1 2
//   coord 0 0 0        (optional, either for every vertex or for none)
//   interior 0         (optional, index of an interior set)
//
// '#' starts a comment. Coordinates are exact rationals ("1/2" is allowed).

#pragma once

#include <string>

#include "sofk/core.hpp"

namespace sofk {

std::string format_hypergraph(const GameHypergraph& hg);
GameHypergraph parse_hypergraph(const std::string& text);

GameHypergraph read_hypergraph_file(const std::string& path);
void write_hypergraph_file(const std::string& path, const GameHypergraph& hg);

// Whole-file helpers shared by the pairing and hypergraph readers.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace sofk
