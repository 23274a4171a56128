#include "qgl3/serialize.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

namespace qgl3 {

namespace {

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string part = text.substr(pos, comma - pos);
        int v = 0;
        auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc() || end != part.data() + part.size())
            throw DomainError("cannot parse weight '" + text + "'");
        out.push_back(v);
        pos = comma + 1;
    }
    return out;
}

template <class T>
T get_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing JSON field '") + key + "'");
    return j.at(key).get<T>();
}

// Malformed documents surface as DomainError, like every other bad input.
template <class F>
auto guarded(const char* what, F f) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw DomainError(std::string(what) + ": " + e.what());
    }
}

}  // namespace

Weight parse_weight(const std::string& text, bool gl3) {
    auto v = parse_ints(text);
    if (gl3) {
        if (v.size() != 3) throw DomainError("expected a GL3 weight a,b,c, got '" + text + "'");
        return {v[0] - v[1], v[1] - v[2]};
    }
    if (v.size() != 2) throw DomainError("expected a weight a,b, got '" + text + "'");
    return {v[0], v[1]};
}

Json to_json(Weight w) { return Json::array({w.a, w.b}); }

Weight weight_from_json(const Json& j) {
    return guarded("weight_from_json", [&]() -> Weight {
        if (!j.is_array() || j.size() != 2) throw DomainError("weight must be a pair, got " + j.dump());
        return {j[0].get<int>(), j[1].get<int>()};
    });
}

Json to_json(const FormalChar& x) {
    Json out = Json::array();
    for (auto& [w, c] : x.terms()) out.push_back({w.a, w.b, c});
    return out;
}

FormalChar char_from_json(const Json& j) {
    return guarded("char_from_json", [&]() -> FormalChar {
        FormalChar x;
        for (auto& t : j) {
            if (!t.is_array() || t.size() != 3) throw DomainError("character term must be [a,b,c]");
            x.add({t[0].get<int>(), t[1].get<int>()}, t[2].get<std::int64_t>());
        }
        return x;
    });
}

Json to_json(const DecompResult& d) {
    Json factors = Json::array();
    for (auto w : d.factors) factors.push_back(to_json(w));
    return {{"lambda", to_json(d.lam)}, {"l", d.l},           {"case", d.case_id},
            {"facet", facet_name(d.facet)}, {"factors", factors}, {"nonzero", d.nonzero}};
}

DecompResult decomp_from_json(const Json& j) {
    return guarded("decomp_from_json", [&]() -> DecompResult {
        DecompResult d;
        d.lam = weight_from_json(j.at("lambda"));
        d.l = get_field<int>(j, "l");
        d.case_id = get_field<std::string>(j, "case");
        d.facet = facet_from_name(get_field<std::string>(j, "facet"));
        for (auto& w : j.at("factors")) d.factors.push_back(weight_from_json(w));
        d.nonzero = get_field<std::vector<bool>>(j, "nonzero");
        if (d.nonzero.size() != d.factors.size()) throw DomainError("factors and nonzero differ in length");
        return d;
    });
}

Json to_json(const ModuleGraph& g) {
    Json nodes = Json::array(), edges = Json::array();
    for (auto& n : g.nodes)
        nodes.push_back({{"id", n.id}, {"weight", to_json(n.weight)}, {"kind", node_kind_name(n.kind)}, {"layer", n.layer}});
    for (auto& [u, v] : g.edges) edges.push_back({u, v});
    return {{"lambda", to_json(g.lam)}, {"l", g.l}, {"kind", node_kind_name(g.kind)}, {"nodes", nodes}, {"edges", edges}};
}

ModuleGraph graph_from_json(const Json& j) {
    return guarded("graph_from_json", [&]() -> ModuleGraph {
        ModuleGraph g;
        g.lam = weight_from_json(j.at("lambda"));
        g.l = get_field<int>(j, "l");
        g.kind = node_kind_from_name(get_field<std::string>(j, "kind"));
        for (auto& n : j.at("nodes"))
            g.nodes.push_back({get_field<int>(n, "id"), weight_from_json(n.at("weight")),
                               node_kind_from_name(get_field<std::string>(n, "kind")), get_field<int>(n, "layer")});
        for (auto& e : j.at("edges")) g.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        return g;
    });
}

Json to_json(const ExtValue& v) { return v.labels(); }

ExtValue ext_from_json(const Json& j) {
    return guarded("ext_from_json", [&]() -> ExtValue { return ExtValue::from_labels(j.get<std::vector<std::string>>()); });
}

Json to_json(const HomWitness& w) { return {{"beta", root_name(w.beta)}, {"m", w.m}, {"e", w.e}}; }

HomWitness witness_from_json(const Json& j) {
    return guarded("witness_from_json", [&]() -> HomWitness {
        return {root_from_name(get_field<std::string>(j, "beta")), get_field<long>(j, "m"), get_field<int>(j, "e")};
    });
}

Json hom_record(Weight lam, Weight mu, const std::optional<HomWitness>& w) {
    return {{"lambda", to_json(lam)}, {"mu", to_json(mu)}, {"witness", w ? to_json(*w) : Json(nullptr)}};
}

Json to_json(const OffWallFactorList& list) {
    Json factors = Json::array();
    for (auto& f : list.factors) factors.push_back({{"classical", to_json(f.classical)}, {"restricted", to_json(f.restricted)}});
    return {{"rule", list.rule}, {"factors", factors}};
}

OffWallFactorList factor_list_from_json(const Json& j) {
    return guarded("factor_list_from_json", [&]() -> OffWallFactorList {
        OffWallFactorList list;
        list.rule = get_field<std::string>(j, "rule");
        for (auto& f : j.at("factors"))
            list.factors.push_back({weight_from_json(f.at("classical")), weight_from_json(f.at("restricted"))});
        return list;
    });
}

Json to_json(const WallCrossing& c) {
    Json lists = Json::array();
    for (std::size_t i = 0; i < c.lists.size(); ++i) {
        Json entry = to_json(c.lists[i]);
        entry["source"] = to_json(c.source_factors[i]);
        entry["target"] = to_json(c.targets[i]);
        lists.push_back(entry);
    }
    return {{"lambda", to_json(c.lam)},
            {"mu", to_json(c.mu)},
            {"l", c.l},
            {"wall", {{"root", root_name(c.wall.root)}, {"value", c.wall.wall}}},
            {"factor_count", c.factor_count()},
            {"lists", lists}};
}

}  // namespace qgl3
