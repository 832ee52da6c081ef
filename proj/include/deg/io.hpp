#pragma once

#include <string>

#include "deg/graph.hpp"

namespace deg {

SignedColoredGraph parse_graph(const std::string& text);
/// Canonical text: vertices sorted by id, edges sorted by (color, min id, max id).
std::string write_graph(const SignedColoredGraph& g);
std::string write_dot(const SignedColoredGraph& g, const std::string& name = "G");

std::string read_text(const std::string& path);  // "-" reads stdin
void write_text(const std::string& path, const std::string& text);  // "-" writes stdout

}  // namespace deg
