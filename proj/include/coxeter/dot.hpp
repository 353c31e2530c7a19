#pragma once

// Graphviz DOT output for Coxeter diagrams: plain edges carry no label for
// bond 3, "4"/"6" labels otherwise, bold style for infinite bonds, and
// doublecircle shape for special nodes.

#include <string>
#include <vector>

#include "coxeter/diagram.hpp"

namespace coxeter {

std::string to_dot(const CoxeterDiagram& d, const std::vector<std::string>& node_names,
                   const std::vector<size_t>& special_nodes, const std::string& graph_name);

std::string to_dot(const CoxeterDiagram& d);

} // namespace coxeter
