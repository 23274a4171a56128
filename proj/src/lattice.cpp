#include "qgl3/lattice.hpp"

#include <cstdlib>

namespace qgl3 {

std::string to_string(Weight w) {
    return "(" + std::to_string(w.a) + "," + std::to_string(w.b) + ")";
}

Weight root_vector(Root r) {
    switch (r) {
    case Root::Alpha1: return {2, -1};
    case Root::Alpha2: return {-1, 2};
    case Root::Rho: return {1, 1};
    }
    return {};
}

const char* root_name(Root r) {
    switch (r) {
    case Root::Alpha1: return "Alpha1";
    case Root::Alpha2: return "Alpha2";
    case Root::Rho: return "Rho";
    }
    return "?";
}

Root root_from_name(const std::string& name) {
    for (Root r : kPositiveRoots)
        if (name == root_name(r)) return r;
    throw DomainError("unknown root '" + name + "'");
}

long pairing(Weight lam, Root beta) {
    switch (beta) {
    case Root::Alpha1: return long(lam.a) + 1;
    case Root::Alpha2: return long(lam.b) + 1;
    case Root::Rho: return long(lam.a) + lam.b + 2;
    }
    return 0;
}

bool is_dominant(Weight w) { return w.a >= 0 && w.b >= 0; }

bool is_restricted(Weight w, int l) { return w.a >= 0 && w.b >= 0 && w.a < l && w.b < l; }

void require_level(int l) {
    if (l < 2) throw DomainError("l must be at least 2, got " + std::to_string(l));
}

long floor_div(long x, long m) {
    long q = x / m;
    if ((x % m != 0) && ((x < 0) != (m < 0))) --q;
    return q;
}

long floor_mod(long x, long m) { return x - m * floor_div(x, m); }

RestrictedDecomposition decompose(Weight lam, int l) {
    require_level(l);
    Weight r{int(floor_mod(lam.a, l)), int(floor_mod(lam.b, l))};
    return {{int(floor_div(lam.a, l)), int(floor_div(lam.b, l))}, r};
}

Weight compose(Weight classical, Weight restricted, int l) { return long(l) * classical + restricted; }

Weight affine_reflect(Weight lam, Root beta, long m, long step) {
    return lam - (pairing(lam, beta) - m * step) * root_vector(beta);
}

Weight reflect_ordinary(Weight lam, Root beta) {
    long p = pairing(lam, beta) - pairing({0, 0}, beta);
    return lam - p * root_vector(beta);
}

Dominantized dominantize(Weight lam) {
    for (Root r : kPositiveRoots)
        if (pairing(lam, r) == 0) return {0, lam};
    int sign = 1;
    for (;;) {
        if (pairing(lam, Root::Alpha1) < 0) {
            lam = affine_reflect(lam, Root::Alpha1, 0, 1);
        } else if (pairing(lam, Root::Alpha2) < 0) {
            lam = affine_reflect(lam, Root::Alpha2, 0, 1);
        } else {
            return {sign, lam};
        }
        sign = -sign;
    }
}

const char* facet_name(FacetType f) {
    switch (f) {
    case FacetType::Vertex: return "Vertex";
    case FacetType::RightWall: return "RightWall";
    case FacetType::LeftWall: return "LeftWall";
    case FacetType::HorizontalWall: return "HorizontalWall";
    case FacetType::DownAlcove: return "DownAlcove";
    case FacetType::UpAlcove: return "UpAlcove";
    }
    return "?";
}

FacetType facet_from_name(const std::string& name) {
    for (FacetType f : {FacetType::Vertex, FacetType::RightWall, FacetType::LeftWall,
                        FacetType::HorizontalWall, FacetType::DownAlcove, FacetType::UpAlcove})
        if (name == facet_name(f)) return f;
    throw DomainError("unknown facet '" + name + "'");
}

FacetType restricted_facet(Weight lam, int l) {
    auto [r, s] = decompose(lam, l).restricted;
    if (r == l - 1 && s == l - 1) return FacetType::Vertex;
    if (r == l - 1) return FacetType::RightWall;
    if (s == l - 1) return FacetType::LeftWall;
    if (r + s == l - 2) return FacetType::HorizontalWall;
    if (r + s <= l - 3) return FacetType::DownAlcove;
    return FacetType::UpAlcove;
}

FacetType facet_classify(Weight lam, int l) {
    require_level(l);
    if (!is_dominant(lam)) throw DomainError("facet_classify: non-dominant weight " + to_string(lam));
    return restricted_facet(lam, l);
}

Weight dual_weight(Weight lam) { return {lam.b, lam.a}; }

bool dominance_leq(Weight mu, Weight lam) {
    // lam - mu = x*alpha1 + y*alpha2 with x = (2d1+d2)/3, y = (d1+2d2)/3
    long d1 = long(lam.a) - mu.a, d2 = long(lam.b) - mu.b;
    long x3 = 2 * d1 + d2, y3 = d1 + 2 * d2;
    return x3 % 3 == 0 && y3 % 3 == 0 && x3 >= 0 && y3 >= 0;
}

Weight apply(Reflection s, Weight lam) { return affine_reflect(lam, s.root, s.wall, 1); }

bool in_closed_fundamental_alcove(Weight lam, int l) {
    return pairing(lam, Root::Alpha1) >= 0 && pairing(lam, Root::Alpha2) >= 0 && pairing(lam, Root::Rho) <= l;
}

Canonical canonicalize(Weight lam, int l) {
    require_level(l);
    Canonical out{lam, {}};
    const long cap = 10L * (std::labs(lam.a) + std::labs(lam.b) + l);
    for (long it = 0; it < cap; ++it) {
        Reflection s;
        if (pairing(out.rep, Root::Alpha1) < 0)
            s = {Root::Alpha1, 0};
        else if (pairing(out.rep, Root::Alpha2) < 0)
            s = {Root::Alpha2, 0};
        else if (pairing(out.rep, Root::Rho) > l)
            s = {Root::Rho, l};
        else
            return out;
        out.word.push_back(s);
        out.rep = apply(s, out.rep);
    }
    throw std::logic_error("canonicalize: iteration cap exceeded for " + to_string(lam));
}

Weight apply_inverse(const std::vector<Reflection>& word, Weight x) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) x = apply(*it, x);
    return x;
}

bool linked(Weight lam, Weight mu, int l) { return canonicalize(lam, l).rep == canonicalize(mu, l).rep; }

Facet facet_of(Weight lam, int l) {
    require_level(l);
    Facet f;
    f.l = l;
    for (std::size_t i = 0; i < 3; ++i) {
        long p = pairing(lam, kPositiveRoots[i]);
        f.on_wall[i] = floor_mod(p, l) == 0;
        f.n[i] = f.on_wall[i] ? p / l : floor_div(p, l) + 1;
    }
    return f;
}

bool Facet::contains(Weight x) const {
    for (std::size_t i = 0; i < 3; ++i) {
        long p = pairing(x, kPositiveRoots[i]);
        if (on_wall[i] ? p != n[i] * l : !((n[i] - 1) * l < p && p < n[i] * l)) return false;
    }
    return true;
}

bool Facet::in_closure(Weight x) const {
    for (std::size_t i = 0; i < 3; ++i) {
        long p = pairing(x, kPositiveRoots[i]);
        if (on_wall[i] ? p != n[i] * l : !((n[i] - 1) * l <= p && p <= n[i] * l)) return false;
    }
    return true;
}

bool Facet::in_upper_closure(Weight x) const {
    for (std::size_t i = 0; i < 3; ++i) {
        long p = pairing(x, kPositiveRoots[i]);
        if (on_wall[i] ? p != n[i] * l : !((n[i] - 1) * l < p && p <= n[i] * l)) return false;
    }
    return true;
}

int Facet::wall_count() const { return int(on_wall[0]) + int(on_wall[1]) + int(on_wall[2]); }

}  // namespace qgl3
