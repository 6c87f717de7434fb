#pragma once

#include <string>

#include "plsrd/bounds.hpp"
#include "plsrd/graph.hpp"
#include "plsrd/labeling.hpp"
#include "plsrd/solver.hpp"

namespace plsrd {

/// Canonical graph file: {"n":<int>,"edges":[[u,v],...]} with u < v, edges
/// sorted lexicographically, compact whitespace. Emitting the same graph
/// twice yields byte-identical text.
std::string graph_to_canonical_json(const Graph& g);

Graph graph_from_json(const std::string& text);

/// Plain-text reader: "n m" header line, then m lines "u v".
Graph graph_from_edge_list(const std::string& text);

/// Auto-detects JSON vs edge-list input.
Graph parse_graph(const std::string& text);
Graph read_graph_file(const std::string& path);

std::string labeling_to_json(const Labeling& f);
Labeling labeling_from_json(const std::string& text);
Labeling read_labeling_file(const std::string& path);

std::string report_to_json(const ValidationReport& report);
std::string solve_result_to_json(const SolveResult& result);
std::string bounds_record_to_json(const BoundsRecord& record);
std::string packing_to_json(const PackingSet& s);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace plsrd
