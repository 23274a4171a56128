#include "qgl3/translate.hpp"

#include "qgl3/decomp.hpp"

namespace qgl3 {

namespace {

// Alcove k*l < pairing < (k+1)*l for each positive root.
struct Alcove {
    std::array<long, 3> k{};
    int l = 2;

    bool in_closure(Weight x) const {
        for (std::size_t i = 0; i < 3; ++i) {
            long p = pairing(x, kPositiveRoots[i]);
            if (p < k[i] * l || p > (k[i] + 1) * l) return false;
        }
        return true;
    }
};

std::size_t root_index(Root r) { return static_cast<std::size_t>(r); }

Reflection single_wall(Weight x, int l) {
    auto f = facet_of(x, l);
    if (f.wall_count() != 1) throw DomainError(to_string(x) + " does not lie on exactly one wall for l=" + std::to_string(l));
    for (std::size_t i = 0; i < 3; ++i)
        if (f.on_wall[i]) return {kPositiveRoots[i], pairing(x, kPositiveRoots[i])};
    return {};
}

// The alcove whose lower closure carries the wall translates of lam.
Alcove alcove_above_lower_walls(Weight lam, int l) {
    Alcove A;
    A.l = l;
    auto f = facet_of(lam, l);
    if (l >= 3) {
        if (f.wall_count() != 0) throw DomainError(to_string(lam) + " is not in an alcove for l=" + std::to_string(l));
        for (std::size_t i = 0; i < 3; ++i) A.k[i] = floor_div(pairing(lam, kPositiveRoots[i]), l);
        return A;
    }
    if (f.wall_count() != 1) throw DomainError(to_string(lam) + " does not lie on exactly one wall for l=2");
    for (std::size_t i = 0; i < 3; ++i) {
        long p = pairing(lam, kPositiveRoots[i]);
        A.k[i] = f.on_wall[i] ? p / l - 1 : floor_div(p, l);
    }
    return A;
}

Weight target_for(Weight factor, Weight mu_rep, Weight lam_rep, int l) {
    Alcove A;
    A.l = l;
    for (std::size_t i = 0; i < 3; ++i) A.k[i] = floor_div(pairing(factor, kPositiveRoots[i]), l);
    auto canon = canonicalize(factor, l);
    if (canon.rep != mu_rep) throw std::logic_error("factor " + to_string(factor) + " is not in the orbit of " + to_string(mu_rep));
    Reflection s = single_wall(mu_rep, l);
    Weight c1 = apply_inverse(canon.word, lam_rep);
    Weight c2 = apply_inverse(canon.word, apply(s, lam_rep));
    bool in1 = A.in_closure(c1), in2 = A.in_closure(c2);
    if (in1 == in2) throw std::logic_error("ambiguous translation target for " + to_string(factor));
    return in1 ? c1 : c2;
}

}  // namespace

WallTranslationResult translate_onto_wall(Weight nu, Weight lam_orbit, Weight mu_orbit, int l) {
    require_level(l);
    if (!in_closed_fundamental_alcove(lam_orbit, l) || !in_closed_fundamental_alcove(mu_orbit, l))
        throw DomainError("translate_onto_wall: orbit representatives must lie in the closed fundamental alcove");
    if (!facet_of(lam_orbit, l).in_closure(mu_orbit))
        throw DomainError("translate_onto_wall: " + to_string(mu_orbit) + " is not in the closure of the facet of " +
                          to_string(lam_orbit));
    auto canon = canonicalize(nu, l);
    if (canon.rep != lam_orbit)
        throw DomainError("translate_onto_wall: " + to_string(nu) + " is not in the orbit of " + to_string(lam_orbit));
    Weight image = apply_inverse(canon.word, mu_orbit);
    if (facet_of(nu, l).in_upper_closure(image)) return {nu, image};
    return {nu, std::nullopt};
}

FormalChar OffWallFactorList::character(int l) const {
    FormalChar sum;
    for (auto& e : factors) sum += chi_l(e.weight(l), l);
    return sum;
}

OffWallFactorList translate_off_wall(Weight mc, Weight mr, Weight t, int l) {
    require_level(l);
    if (!is_restricted(mr, l) || !is_restricted(t, l))
        throw DomainError("translate_off_wall: restricted parts must lie in X1");
    auto unsupported = [&] {
        return DomainError("translate_off_wall: unsupported combination mu'=" + to_string(mr) + ", target " +
                           to_string(t) + ", l=" + std::to_string(l));
    };
    OffWallFactorList out;
    auto& f = out.factors;
    if (l >= 3) {
        const int a = t.a, b = t.b;
        if (mr.a == l - 1 && mr.b <= l - 2) {
            if (a + b > l - 3) throw unsupported();
            out.rule = "right-wall";
            f = {{mc, {l - a - 2, a + b + 1}}, {mc + Weight{1, 0}, t}, {mc + Weight{-1, 1}, t},
                 {mc + Weight{0, -1}, t}, {mc, {l - a - b - 3, a}}, {mc, {l - a - 2, a + b + 1}}};
        } else if (mr.b == l - 1 && mr.a <= l - 2) {
            if (a + b > l - 3) throw unsupported();
            out.rule = "left-wall";
            f = {{mc, {a + b + 1, l - b - 2}}, {mc + Weight{0, 1}, t}, {mc + Weight{1, -1}, t},
                 {mc + Weight{-1, 0}, t}, {mc, {b, l - a - b - 3}}, {mc, {a + b + 1, l - b - 2}}};
        } else if (mr.a + mr.b == l - 2) {
            if (restricted_facet(t, l) != FacetType::UpAlcove) throw unsupported();
            out.rule = "horizontal-wall";
            Weight outer{l - 2 - b, l - 2 - a};
            f = {{mc, outer}, {mc, t}, {mc, outer}};
        } else {
            throw unsupported();
        }
        return out;
    }
    const Weight zero{0, 0}, w10{1, 0}, w01{0, 1};
    if (mr == w10 && t == zero) {
        out.rule = "l2-right-wall";
        f = {{mc, w01}, {mc + w10, zero}, {mc + Weight{-1, 1}, zero}, {mc + Weight{0, -1}, zero}, {mc, w01}};
    } else if (mr == w01 && t == zero) {
        out.rule = "l2-left-wall";
        f = {{mc, w10}, {mc + w01, zero}, {mc + Weight{1, -1}, zero}, {mc + Weight{-1, 0}, zero}, {mc, w10}};
    } else if (mr == zero && (t == w10 || t == w01)) {
        out.rule = "l2-horizontal-wall";
        f = {{mc, t}};
    } else if ((mr == w10 && t == w01) || (mr == w01 && t == w10)) {
        out.rule = "l2-side-wall";
        f = {{mc, zero}};
    } else {
        throw unsupported();
    }
    return out;
}

std::size_t WallCrossing::factor_count() const {
    std::size_t n = 0;
    for (auto& x : lists) n += x.factors.size();
    return n;
}

FormalChar WallCrossing::character() const {
    FormalChar sum;
    for (auto& x : lists) sum += x.character(l);
    return sum;
}

WallCrossing translate_nabla_off_wall(Weight lam, Weight mu, int l) {
    require_level(l);
    if (!is_dominant(lam) || !is_dominant(mu)) throw DomainError("translate_nabla_off_wall: weights must be dominant");
    Alcove A = alcove_above_lower_walls(lam, l);
    Reflection s = single_wall(mu, l);
    if (!A.in_closure(mu) || s.wall != A.k[root_index(s.root)] * l)
        throw DomainError("translate_nabla_off_wall: " + to_string(mu) + " is not on a lower wall below " + to_string(lam));
    WallCrossing out;
    out.lam = lam;
    out.mu = mu;
    out.l = l;
    out.wall = s;
    Weight lam_rep = canonicalize(lam, l).rep;
    Weight mu_rep = canonicalize(mu, l).rep;
    out.source_factors = chi_decomposition(mu, l).factors;
    for (auto& f : out.source_factors) {
        Weight t = target_for(f, mu_rep, lam_rep, l);
        auto fd = decompose(f, l);
        out.targets.push_back(t);
        out.lists.push_back(translate_off_wall(fd.classical, fd.restricted, decompose(t, l).restricted, l));
    }
    return out;
}

namespace {

bool regular_dominant(Weight classical) { return is_dominant(classical) && dominantize(classical).sign != 0; }

bool generic_crossing(const WallCrossing& c, int l) {
    for (auto& f : c.source_factors)
        if (!regular_dominant(decompose(f, l).classical)) return false;
    for (auto& list : c.lists)
        for (auto& e : list.factors)
            if (!regular_dominant(e.classical)) return false;
    return true;
}

}  // namespace

std::optional<Weight> generic_wall_weight(Weight lam, int l) {
    if (facet_of(lam, l).wall_count() != (l >= 3 ? 0 : 1)) return std::nullopt;
    Alcove A = alcove_above_lower_walls(lam, l);
    std::vector<Weight> candidates;
    if (l >= 3) {
        // Wall points of the closed fundamental alcove, carried over to lam's alcove.
        auto canon = canonicalize(lam, l);
        for (int x = -1; x < l; ++x)
            for (int y = -1; y < l; ++y) {
                Weight m{x, y};
                if (!in_closed_fundamental_alcove(m, l) || facet_of(m, l).wall_count() != 1) continue;
                candidates.push_back(apply_inverse(canon.word, m));
            }
    } else {
        for (int x = lam.a - 4; x <= lam.a + 4; ++x)
            for (int y = lam.b - 4; y <= lam.b + 4; ++y) candidates.push_back({x, y});
    }
    for (Weight mu : candidates) {
        if (!is_dominant(mu) || mu == lam || !A.in_closure(mu) || facet_of(mu, l).wall_count() != 1) continue;
        Reflection s = single_wall(mu, l);
        if (s.wall != A.k[root_index(s.root)] * l) continue;
        try {
            if (generic_crossing(translate_nabla_off_wall(lam, mu, l), l)) return mu;
        } catch (const DomainError&) {
            // some factor of nabla(mu) sits on more than one wall
        }
    }
    return std::nullopt;
}

int translate_nabla_factor_count(Weight lam, int l) {
    auto mu = generic_wall_weight(lam, l);
    if (!mu) throw DomainError("translate_nabla_factor_count: no generic wall weight below " + to_string(lam));
    return int(translate_nabla_off_wall(lam, *mu, l).factor_count());
}

}  // namespace qgl3
