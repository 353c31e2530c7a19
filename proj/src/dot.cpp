// Graphviz DOT rendering of Coxeter diagrams.

#include "coxeter/dot.hpp"

#include <sstream>

namespace coxeter {

std::string to_dot(const CoxeterDiagram& d, const std::vector<std::string>& node_names,
                   const std::vector<size_t>& special_nodes, const std::string& graph_name) {
    std::ostringstream os;
    os << "graph " << (graph_name.empty() ? "diagram" : graph_name) << " {\n";
    os << "  node [shape=circle];\n";
    for (size_t i = 0; i < d.size(); ++i) {
        os << "  n" << i << " [label=\"" << (i < node_names.size() ? node_names[i] : "") << "\"";
        for (size_t s : special_nodes)
            if (s == i) {
                os << ", shape=doublecircle";
                break;
            }
        os << "];\n";
    }
    for (const auto& e : d.edges()) {
        os << "  n" << e.a << " -- n" << e.b;
        if (e.m == kInfiniteBond)
            os << " [style=bold, label=\"inf\"]";
        else if (e.m != 3)
            os << " [label=\"" << e.m << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string to_dot(const CoxeterDiagram& d) {
    std::vector<std::string> names;
    for (size_t i = 0; i < d.size(); ++i) names.push_back(std::to_string(i + 1));
    return to_dot(d, names, {}, "diagram");
}

} // namespace coxeter
