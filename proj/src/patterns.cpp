#include "berge/patterns.hpp"

namespace berge {

std::optional<Graph> builtin_pattern(const std::string& name) {
    if (name == "k2") return complete_graph(2);
    if (name == "k3") return complete_graph(3);
    if (name == "k4") return complete_graph(4);
    if (name == "k5") return complete_graph(5);
    if (name == "k4e")
        return graph_from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    if (name == "p3") return graph_from_edges(3, {{0, 1}, {1, 2}});
    if (name == "p4") return graph_from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    if (name == "c4") return graph_from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    if (name == "c5")
        return graph_from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    if (name == "2k2") return graph_from_edges(4, {{0, 1}, {2, 3}});
    return std::nullopt;
}

std::vector<std::string> builtin_pattern_names() {
    return {"k2", "k3", "k4", "k5", "k4e", "p3", "p4", "c4", "c5", "2k2"};
}

} // namespace berge
