#include "qgl3/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "qgl3/decomp.hpp"
#include "qgl3/ext.hpp"
#include "qgl3/homs.hpp"

namespace qgl3 {

using Edge = std::pair<int, int>;
using EdgeSet = std::set<Edge>;

const char* node_kind_name(NodeKind k) { return k == NodeKind::G1BSimple ? "G1BSimple" : "NablaL"; }

NodeKind node_kind_from_name(const std::string& name) {
    if (name == "G1BSimple") return NodeKind::G1BSimple;
    if (name == "NablaL") return NodeKind::NablaL;
    throw DomainError("unknown node kind '" + name + "'");
}

const GraphNode* ModuleGraph::node(int id) const {
    for (auto& n : nodes)
        if (n.id == id) return &n;
    return nullptr;
}

std::vector<int> ModuleGraph::sinks() const {
    std::vector<int> out;
    for (auto& n : nodes)
        if (std::none_of(edges.begin(), edges.end(), [&](const Edge& e) { return e.first == n.id; })) out.push_back(n.id);
    return out;
}

std::vector<int> ModuleGraph::sources() const {
    std::vector<int> out;
    for (auto& n : nodes)
        if (std::none_of(edges.begin(), edges.end(), [&](const Edge& e) { return e.second == n.id; })) out.push_back(n.id);
    return out;
}

namespace {

const EdgeSet kDown13 = {{9, 6}, {9, 7}, {9, 8}, {6, 5}, {6, 2}, {7, 2}, {7, 4},
                         {8, 4}, {8, 3}, {5, 4}, {3, 2}, {4, 1}, {2, 1}};
const EdgeSet kUp13 = {{3, 2}, {3, 9}, {2, 8}, {2, 5}, {2, 1}, {9, 6}, {9, 8},
                       {9, 7}, {1, 7}, {6, 5}, {7, 4}, {8, 4}, {5, 4}};

// Rows of the displayed diagrams, listed from the bottom.
using Rows = std::vector<std::vector<int>>;
const Rows kDownRows = {{1}, {2, 4}, {3, 5}, {6, 7, 8}, {9}};
const Rows kUpRows = {{4}, {5, 7, 8}, {1, 6}, {2, 9}, {3}};
const Rows kDownRowsSplit = {{1}, {2, 4}, {3, 5, 6, 7, 8}, {9}};
const Rows kUpRowsSplit = {{4}, {1, 5, 6, 7, 8}, {2, 9}, {3}};

std::map<int, int> layers_from_rows(const Rows& rows) {
    std::map<int, int> out;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int id : rows[i]) out[id] = int(i);
    return out;
}

// Longest path down to a sink.
std::map<int, int> layers_from_edges(const std::vector<int>& ids, const EdgeSet& edges) {
    std::map<int, int> memo;
    std::function<int(int)> depth = [&](int v) -> int {
        if (auto it = memo.find(v); it != memo.end()) return it->second;
        int d = 0;
        for (auto& [u, w] : edges)
            if (u == v) d = std::max(d, depth(w) + 1);
        return memo[v] = d;
    };
    for (int id : ids) depth(id);
    return memo;
}

ModuleGraph assemble(Weight lam, int l, NodeKind kind, const std::vector<Weight>& weights, const std::vector<int>& ids,
                     const EdgeSet& edges, const std::map<int, int>& layers) {
    ModuleGraph g;
    g.lam = lam;
    g.l = l;
    g.kind = kind;
    std::set<int> keep(ids.begin(), ids.end());
    for (int id : ids) g.nodes.push_back({id, weights[std::size_t(id - 1)], kind, layers.at(id)});
    std::sort(g.nodes.begin(), g.nodes.end(),
              [](const GraphNode& x, const GraphNode& y) { return std::tie(x.layer, x.id) < std::tie(y.layer, y.id); });
    for (auto& e : edges)
        if (keep.count(e.first) && keep.count(e.second)) g.edges.push_back(e);
    return g;
}

std::vector<int> iota_ids(std::size_t n) {
    std::vector<int> ids(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = int(i) + 1;
    return ids;
}

// Drops the edge upper-lower and reattaches across it, as in the fully split diagrams.
void split_edge(EdgeSet& edges, int upper, int lower, int below_lower, int above_upper) {
    edges.erase({upper, lower});
    edges.insert({upper, below_lower});
    edges.insert({above_upper, lower});
}

}  // namespace

ModuleGraph zhat_structure(Weight lam, int l) {
    auto weights = zhat_factors(lam, l);
    auto ids = iota_ids(weights.size());
    switch (restricted_facet(lam, l)) {
    case FacetType::Vertex:
        return assemble(lam, l, NodeKind::G1BSimple, weights, ids, {}, {{1, 0}});
    case FacetType::RightWall:
    case FacetType::LeftWall:
        return assemble(lam, l, NodeKind::G1BSimple, weights, ids, {{4, 3}, {3, 2}, {2, 1}},
                        {{1, 0}, {2, 1}, {3, 2}, {4, 3}});
    case FacetType::HorizontalWall:
        return assemble(lam, l, NodeKind::G1BSimple, weights, ids, {{4, 2}, {4, 3}, {2, 1}, {3, 1}},
                        {{1, 0}, {2, 1}, {3, 1}, {4, 2}});
    case FacetType::DownAlcove:
        return assemble(lam, l, NodeKind::G1BSimple, weights, ids, kDown13, layers_from_rows(kDownRows));
    case FacetType::UpAlcove:
        return assemble(lam, l, NodeKind::G1BSimple, weights, ids, kUp13, layers_from_rows(kUpRows));
    }
    return {};
}

ModuleGraph nabla_l_filtration(Weight lam, int l) {
    auto d = chi_decomposition(lam, l);
    auto [cl, rs] = decompose(lam, l);
    const int a = cl.a, b = cl.b;
    auto congruent = [l](int x, int c) { return floor_mod(x - c, l) == 0; };
    EdgeSet edges;
    std::map<int, int> layers;
    std::vector<int> ids = iota_ids(d.factors.size());
    const EdgeSet chain = {{1, 2}, {2, 3}, {3, 4}};
    const EdgeSet diamond = {{1, 2}, {1, 3}, {2, 4}, {3, 4}};
    const std::map<int, int> chain_layers = {{1, 3}, {2, 2}, {3, 1}, {4, 0}};
    const std::map<int, int> diamond_layers = {{1, 2}, {2, 1}, {3, 1}, {4, 0}};

    switch (d.facet) {
    case FacetType::Vertex:
        layers = {{1, 0}};
        break;
    case FacetType::RightWall:
    case FacetType::LeftWall: {
        bool as_chain = congruent(d.facet == FacetType::RightWall ? a : b, -1);
        edges = as_chain ? chain : diamond;
        layers = as_chain ? chain_layers : diamond_layers;
        break;
    }
    case FacetType::HorizontalWall:
        edges = diamond;
        layers = diamond_layers;
        break;
    case FacetType::DownAlcove:
        if (a == 0 && b == 0) {
            ids = {1};
            layers = {{1, 0}};
        } else if (b == 0) {
            ids = {1, 4, 5};
            edges = {{5, 4}, {4, 1}};
            layers = {{1, 0}, {4, 1}, {5, 2}};
        } else if (a == 0) {
            ids = {1, 2, 3};
            edges = {{3, 2}, {2, 1}};
            layers = {{1, 0}, {2, 1}, {3, 2}};
        } else {
            bool ca = congruent(a, 0), cb = congruent(b, 0);
            edges = kDown13;
            if (!ca) split_edge(edges, 6, 5, 4, 9);
            if (!cb) split_edge(edges, 8, 3, 2, 9);
            if (ca && cb)
                layers = layers_from_rows(kDownRows);
            else if (!ca && !cb)
                layers = layers_from_rows(kDownRowsSplit);
            else
                layers = layers_from_edges(ids, edges);
        }
        break;
    case FacetType::UpAlcove: {
        bool ca = congruent(a, -1), cb = congruent(b, -1);
        edges = kUp13;
        if (!ca) split_edge(edges, 6, 5, 4, 9);
        if (!cb) split_edge(edges, 1, 7, 4, 2);
        if (ca && cb)
            layers = layers_from_rows(kUpRows);
        else if (!ca && !cb)
            layers = layers_from_rows(kUpRowsSplit);
        else
            layers = layers_from_edges(ids, edges);
        break;
    }
    }
    // Factors that are not genuine modules (or cancel) are omitted with their edges.
    auto effective = d.effective_indices();
    std::vector<int> kept;
    for (int id : ids)
        if (std::find(effective.begin(), effective.end(), std::size_t(id - 1)) != effective.end()) kept.push_back(id);
    return assemble(lam, l, NodeKind::NablaL, d.factors, kept, edges, layers);
}

// ---------------------------------------------------------------------------

bool ValidationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const GraphCheck& c) { return !c.applicable || c.passed; });
}

const GraphCheck* ValidationReport::find(const std::string& name) const {
    for (auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::string ValidationReport::to_text() const {
    std::ostringstream os;
    for (auto& c : checks) {
        os << c.name << ": " << (!c.applicable ? "n/a" : c.passed ? "ok" : "FAILED");
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << "\n";
    }
    return os.str();
}

namespace {

GraphCheck check_structure(const ModuleGraph& g) {
    GraphCheck c{"structure", true, true, {}};
    std::set<int> ids;
    for (auto& n : g.nodes)
        if (!ids.insert(n.id).second) {
            c.passed = false;
            c.detail = "duplicate node id " + std::to_string(n.id);
            return c;
        }
    std::set<Edge> seen;
    for (auto& [u, v] : g.edges) {
        auto *nu = g.node(u), *nv = g.node(v);
        std::string e = std::to_string(u) + "-" + std::to_string(v);
        if (!nu || !nv) c.detail = "edge " + e + " has an unknown endpoint";
        else if (!seen.insert({u, v}).second) c.detail = "duplicate edge " + e;
        else if (nu->layer <= nv->layer) c.detail = "edge " + e + " does not point to a lower layer";
        if (!c.detail.empty()) {
            c.passed = false;
            return c;
        }
    }
    // layers strictly decrease along edges, so the graph is acyclic
    return c;
}

GraphCheck check_character(const ModuleGraph& g) {
    GraphCheck c{"character", true, true, {}};
    FormalChar sum;
    for (auto& n : g.nodes) sum += g.kind == NodeKind::G1BSimple ? lhat_char(n.weight, g.l) : chi_l(n.weight, g.l);
    FormalChar target = g.kind == NodeKind::G1BSimple ? zhat_char(g.lam, g.l) : weyl_char(g.lam);
    if (sum != target) {
        c.passed = false;
        c.detail = "node characters sum to dimension " + std::to_string(sum.dimension()) + ", expected " +
                   std::to_string(target.dimension());
    }
    return c;
}

GraphCheck check_unique_end(const ModuleGraph& g, const std::string& name, const std::vector<int>& ends, Weight expected) {
    GraphCheck c{name, true, true, {}};
    if (g.kind != NodeKind::G1BSimple) {
        c.applicable = false;
        return c;
    }
    if (ends.size() != 1) {
        c.passed = false;
        c.detail = std::to_string(ends.size()) + " candidates";
    } else if (g.node(ends[0])->weight != expected) {
        c.passed = false;
        c.detail = "found " + to_string(g.node(ends[0])->weight) + ", expected " + to_string(expected);
    }
    return c;
}

GraphCheck check_ext(const ModuleGraph& g) {
    GraphCheck c{"ext", true, true, {}};
    if (g.kind != NodeKind::G1BSimple) {
        c.applicable = false;
        return c;
    }
    for (auto& [u, v] : g.edges) {
        auto *nu = g.node(u), *nv = g.node(v);
        bool ok = false;
        try {
            ok = nu && nv && ext1_g1b(g.lam, nu->weight, nv->weight, g.l) == 1;
        } catch (const DomainError&) {
            ok = false;
        }
        if (!ok) {
            c.passed = false;
            c.detail = "edge " + std::to_string(u) + "-" + std::to_string(v) + " has no extension";
            return c;
        }
    }
    return c;
}

GraphCheck check_duality(const ModuleGraph& g) {
    GraphCheck c{"duality", true, true, {}};
    if (g.kind != NodeKind::G1BSimple) {
        c.applicable = false;
        return c;
    }
    auto relabel = [l = g.l](Weight nu) {
        auto d = decompose(nu, l);
        return dual_weight(d.restricted) - long(l) * d.classical;
    };
    ModuleGraph h = zhat_structure(long(2 * (g.l - 1)) * kRho - g.lam, g.l);
    std::map<Weight, int> h_ids;
    for (auto& n : h.nodes) h_ids[n.weight] = n.id;
    std::map<int, int> to_h;
    for (auto& n : g.nodes) {
        auto it = h_ids.find(relabel(n.weight));
        if (it == h_ids.end() || g.nodes.size() != h.nodes.size()) {
            c.passed = false;
            c.detail = "factor " + to_string(n.weight) + " has no dual partner";
            return c;
        }
        to_h[n.id] = it->second;
    }
    EdgeSet reversed;
    for (auto& [u, v] : g.edges) reversed.insert({to_h[v], to_h[u]});
    if (reversed != EdgeSet(h.edges.begin(), h.edges.end())) {
        c.passed = false;
        c.detail = "edges are not the reversal of the dual graph";
    }
    return c;
}

}  // namespace

ValidationReport validate_graph(const ModuleGraph& g) {
    ValidationReport r;
    r.checks.push_back(check_structure(g));
    r.checks.push_back(check_character(g));
    r.checks.push_back(check_unique_end(g, "sink", g.sinks(), g.lam));
    r.checks.push_back(check_unique_end(g, "source", g.sources(), zhat_head_weight(g.lam, g.l)));
    r.checks.push_back(check_ext(g));
    r.checks.push_back(check_duality(g));
    return r;
}

std::string to_dot(const ModuleGraph& g) {
    std::ostringstream os;
    const char* prefix = g.kind == NodeKind::G1BSimple ? "L̂" : "∇_l";
    os << "digraph \"" << (g.kind == NodeKind::G1BSimple ? "zhat" : "lfilt") << to_string(g.lam) << "_l" << g.l
       << "\" {\n";
    os << "  rankdir=TB;\n";
    for (auto& n : g.nodes)
        os << "  n" << n.id << " [label=\"" << prefix << to_string(n.weight) << "\", layer=" << n.layer << "];\n";
    for (auto& [u, v] : g.edges) os << "  n" << u << " -> n" << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace qgl3
