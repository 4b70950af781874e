#pragma once

#include <string>
#include <vector>

#include "emsim/graph.hpp"
#include "emsim/model.hpp"

namespace emsim {

// Locale-independent number formatting/parsing (std::to_chars/from_chars).
// fmt_double emits the shortest string that round-trips exactly.
std::string fmt_double(double x);
double parse_double(const std::string& tok);  // throws DataError
int64_t parse_int(const std::string& tok);    // throws DataError

// Electorate text format (whitespace/line oriented, '#' comments):
//   candidates <m>
//   <id> <position>            (m lines, ids 0..m-1 in order)
//   voters <n>
//   <id> <position>            (n lines, ids 0..n-1 in order)
//   views                      (optional; n lines of m perceived positions)
//   ...
//   target <candidate id>
// A missing views block means exact perception (views = true positions).
Electorate load_electorate(const std::string& path);
void save_electorate(const Electorate& e, const std::string& path);

// Edge list ('#' comments allowed).  A two-column line "u v" is an
// undirected pair: both directed edges are added at default_p.  A
// three-column line "u v p" is a single directed edge, so asymmetric
// networks and probabilities survive a save/load round-trip.  Duplicates
// keep the first occurrence.  Node count is max id + 1.
SocialNetwork load_edge_list(const std::string& path, double default_p = 1.0);
// Writes every directed edge as "u v p".  load/save round-trip is identity.
void save_edge_list(const SocialNetwork& net, const std::string& path);

// Partition: one "node community" line per node; labels must be dense 0..k-1.
Partition load_partition(const std::string& path);

}  // namespace emsim
