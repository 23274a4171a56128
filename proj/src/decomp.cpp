#include "qgl3/decomp.hpp"

#include <map>

namespace qgl3 {

namespace {

Weight lw(int l, Weight classical, Weight restricted) { return compose(classical, restricted, l); }

// The nine alcove weights; (a,b) classical, (r,s) in the fundamental alcove.
std::vector<Weight> down_alcove_family(int l, int a, int b, int r, int s) {
    return {{l * a + r, l * b + s},
            {l * a + r + s + 1, l * b - s - 2},
            {l * a + l - r - s - 3, l * b - 2 * l + r},
            {l * a - r - 2, l * b + r + s + 1},
            {l * a - 2 * l + s, l * b + l - r - s - 3},
            {l * a + s, l * b - r - s - 3},
            {l * a - l + r, l * b - l + s},
            {l * a - r - s - 3, l * b + r},
            {l * a - s - 2, l * b - r - 2}};
}

std::vector<Weight> up_alcove_family(int l, int a, int b, int r, int s) {
    return {{l * a - l + s, l * b + 2 * l - r - s - 3},
            {l * a - r - 2, l * b + r + s + 1},
            {l * a - l + r, l * b - l + s},
            {l * a + l - s - 2, l * b + l - r - 2},
            {l * a - r - s - 3, l * b + r},
            {l * a + 2 * l - r - s - 3, l * b - l + r},
            {l * a + s, l * b - r - s - 3},
            {l * a + r, l * b + s},
            {l * a + r + s + 1, l * b - s - 2}};
}

}  // namespace

const char* case_id_for(FacetType f) {
    switch (f) {
    case FacetType::Vertex: return "i";
    case FacetType::RightWall: return "ii";
    case FacetType::LeftWall: return "iii";
    case FacetType::HorizontalWall: return "iv";
    case FacetType::DownAlcove: return "v";
    case FacetType::UpAlcove: return "vi";
    }
    return "?";
}

std::vector<Weight> DecompResult::filtered() const {
    std::vector<Weight> out;
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (nonzero[i]) out.push_back(factors[i]);
    return out;
}

std::vector<std::size_t> DecompResult::effective_indices() const {
    std::map<Weight, int> net;
    for (auto& f : factors) {
        auto d = decompose(f, l);
        auto dom = dominantize(d.classical);
        if (dom.sign != 0) net[compose(dom.rep, d.restricted, l)] += dom.sign;
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        auto d = decompose(factors[i], l);
        if (is_dominant(d.classical) && net[factors[i]] != 0) out.push_back(i);
    }
    return out;
}

DecompResult chi_decomposition(Weight lam, int l) {
    require_level(l);
    DecompResult res;
    res.lam = lam;
    res.l = l;
    res.facet = facet_classify(lam, l);
    res.case_id = case_id_for(res.facet);
    auto [cl, rs] = decompose(lam, l);
    const int a = cl.a, b = cl.b;
    switch (res.facet) {
    case FacetType::Vertex:
        res.factors = {lam};
        break;
    case FacetType::RightWall: {
        int r = rs.b, s = l - r - 2;
        res.factors = {lw(l, {a, b - 1}, {s, l - 1}), lw(l, {a + 1, b - 1}, {r, s}), lw(l, {a - 1, b}, {r, s}), lam};
        break;
    }
    case FacetType::LeftWall: {
        int s = rs.a, r = l - s - 2;
        res.factors = {lw(l, {a - 1, b}, {l - 1, r}), lw(l, {a - 1, b + 1}, {r, s}), lw(l, {a, b - 1}, {r, s}), lam};
        break;
    }
    case FacetType::HorizontalWall: {
        int r = rs.a, s = rs.b;
        res.factors = {lw(l, {a - 1, b - 1}, {r, s}), lw(l, {a, b - 1}, {l - 1, r}), lw(l, {a - 1, b}, {s, l - 1}), lam};
        break;
    }
    case FacetType::DownAlcove:
        res.factors = down_alcove_family(l, a, b, rs.a, rs.b);
        break;
    case FacetType::UpAlcove:
        res.factors = up_alcove_family(l, a, b, l - 2 - rs.b, l - 2 - rs.a);
        break;
    }
    for (auto& f : res.factors) res.nonzero.push_back(dominantize(decompose(f, l).classical).sign != 0);
    return res;
}

FormalChar decomposition_char(const DecompResult& d) {
    FormalChar sum;
    for (auto& f : d.factors) sum += chi_l(f, d.l);
    return sum;
}

std::vector<Weight> zhat_factors(Weight lam, int l) {
    require_level(l);
    auto [cl, rs] = decompose(lam, l);
    Weight shift = long(l) * cl;
    auto shifted = [&](std::vector<Weight> ws) {
        for (auto& w : ws) w = w + shift;
        return ws;
    };
    switch (restricted_facet(lam, l)) {
    case FacetType::Vertex:
        return {lam};
    case FacetType::RightWall: {
        int r = rs.b, s = l - r - 2;
        return shifted({{l - 1, r}, {r - l, s}, {r + l, s - l}, {s, -1}});
    }
    case FacetType::LeftWall: {
        int s = rs.a, r = l - s - 2;
        return shifted({{s, l - 1}, {r, s - l}, {r - l, s + l}, {-1, r}});
    }
    case FacetType::HorizontalWall: {
        int r = rs.a, s = rs.b;
        return shifted({{r, s}, {s - l, l - 1}, {l - 1, r - l}, {r - l, s - l}});
    }
    case FacetType::DownAlcove:
        return down_alcove_family(l, cl.a, cl.b, rs.a, rs.b);
    case FacetType::UpAlcove:
        return up_alcove_family(l, cl.a, cl.b, l - 2 - rs.b, l - 2 - rs.a);
    }
    return {};
}

FormalChar zhat_char(Weight lam, int l) {
    require_level(l);
    FormalChar c = FormalChar::e(lam);
    for (Root r : kPositiveRoots) {
        FormalChar geom;
        for (int j = 0; j < l; ++j) geom.add(-long(j) * root_vector(r), 1);
        c = c * geom;
    }
    return c;
}

FormalChar lhat_char(Weight nu, int l) {
    auto d = decompose(nu, l);
    return restricted_simple_char(d.restricted, l).shifted(long(l) * d.classical);
}

FormalChar nabla_l_char(Weight mu, int l) {
    auto d = decompose(mu, l);
    if (!is_dominant(d.classical))
        throw DomainError("nabla_l_char: classical part " + to_string(d.classical) + " of " + to_string(mu) +
                          " is not dominant");
    return chi_l(mu, l);
}

}  // namespace qgl3
