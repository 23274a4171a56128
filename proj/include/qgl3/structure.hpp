#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qgl3/charring.hpp"

namespace qgl3 {

enum class NodeKind { G1BSimple, NablaL };

const char* node_kind_name(NodeKind k);
NodeKind node_kind_from_name(const std::string& name);

struct GraphNode {
    int id;  // subscript of the factor in its defining list
    Weight weight;
    NodeKind kind;
    int layer;  // 0 is the bottom row

    bool operator==(const GraphNode&) const = default;
};

struct ModuleGraph {
    Weight lam;
    int l = 2;
    NodeKind kind = NodeKind::G1BSimple;
    std::vector<GraphNode> nodes;             // ordered by (layer, id)
    std::vector<std::pair<int, int>> edges;   // (upper id, lower id), sorted

    const GraphNode* node(int id) const;
    std::vector<int> sinks() const;
    std::vector<int> sources() const;
    bool operator==(const ModuleGraph&) const = default;
};

ModuleGraph zhat_structure(Weight lam, int l);
ModuleGraph nabla_l_filtration(Weight lam, int l);

struct GraphCheck {
    std::string name;
    bool applicable = true;
    bool passed = true;
    std::string detail;
};

struct ValidationReport {
    std::vector<GraphCheck> checks;

    bool passed() const;
    const GraphCheck* find(const std::string& name) const;
    std::string to_text() const;
};

ValidationReport validate_graph(const ModuleGraph& g);

std::string to_dot(const ModuleGraph& g);

}  // namespace qgl3
