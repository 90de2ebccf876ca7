#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "turan/hypergraph.hpp"

namespace turan {

/// Edge-list text format: first line "k n", then one edge per line as k
/// space-separated 0-based vertex indices. Lines are emitted in lexicographic
/// order of the sorted vertex tuples; the reader accepts any line order but
/// rejects duplicate edges, repeated vertices and out-of-range indices,
/// reporting the offending line number.
Hypergraph parse_hypergraph(const std::string& text);
Hypergraph read_hypergraph_file(const std::string& path);

std::string format_hypergraph(const Hypergraph& h);
void write_hypergraph_file(const Hypergraph& h, const std::string& path);

/// built-in graphs: K{t}_{k} for t <= 8, k <= 5 (e.g. "K4_3"), "K4_3_minus_e",
/// "P3", "edgeless(n,k)"; throws std::invalid_argument on anything else
Hypergraph named_graph(const std::string& name);
bool is_named_graph(const std::string& name);

/// resolves a named graph or falls back to reading an edge-list file
Hypergraph graph_from_name_or_file(const std::string& spec);

/// FNV-1a 64-bit digest used to tie reports to emitted artifact files
std::uint64_t fnv1a64(const std::string& data);
std::string file_digest(const std::string& path);

} // namespace turan
