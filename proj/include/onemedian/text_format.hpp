#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "onemedian/graph.hpp"
#include "onemedian/instance.hpp"

namespace onemedian {

// Text formats, version 1.
//
// Graph:     "n m_edges", then m_edges lines "u v cost" (0-based ids).
// Instance:  a graph block, then a line "m", then m lines "customer weight".
//
// Writers emit each undirected edge once (u < v, sorted) and print reals
// with 17 significant digits so a write/read cycle reproduces every bit.
// Readers report the offending 1-based line number in ParseError messages,
// including Graph invariant violations such as duplicate edges.

void write_graph(std::ostream& out, const Graph& graph);
void write_instance(std::ostream& out, const Instance& instance);

Graph read_graph(std::istream& in);
Instance read_instance(std::istream& in);

std::string format_real(double value);

Instance load_instance(const std::filesystem::path& path);
void save_instance(const std::filesystem::path& path, const Instance& instance);

}  // namespace onemedian
