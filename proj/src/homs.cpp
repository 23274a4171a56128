#include "qgl3/homs.hpp"

#include <algorithm>

namespace qgl3 {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long wall_step(int l, int p, int e) {
    long step = l;
    for (int i = 0; i < e; ++i) step *= p;
    return step;
}

namespace {

void check_params(int l, int p) {
    require_level(l);
    if (p < 0 || (p > 0 && !is_prime(p))) throw DomainError("p must be 0 or a prime, got " + std::to_string(p));
}

// k with lam - mu = k * root_vector(beta), if any.
std::optional<long> root_multiple(Weight lam, Weight mu, Root beta) {
    Weight d = lam - mu, v = root_vector(beta);
    long k = d.a / v.a;
    if (long(v.a) * k != d.a || long(v.b) * k != d.b) return std::nullopt;
    return k;
}

long multiples_in(long lo, long hi, long step) { return floor_div(hi, step) - floor_div(lo - 1, step); }

}  // namespace

bool witness_valid(Weight lam, Weight mu, const HomWitness& w, int l, int p) {
    if (w.e < 0 || (p == 0 && w.e != 0)) return false;
    long step = wall_step(l, p, w.e);
    if (affine_reflect(lam, w.beta, w.m, step) != mu) return false;
    long lo = std::min(pairing(lam, w.beta), pairing(mu, w.beta));
    long hi = std::max(pairing(lam, w.beta), pairing(mu, w.beta));
    return multiples_in(lo, hi, step) == 1;
}

std::optional<HomWitness> hom_exists_mirror(Weight lam, Weight mu, int l, int p) {
    check_params(l, p);
    if (!is_dominant(lam) || !is_dominant(mu)) throw DomainError("hom_exists_mirror: weights must be dominant");
    if (lam == mu || !dominance_leq(mu, lam)) return std::nullopt;
    long max_pairing = 0;
    for (Root b : kPositiveRoots) max_pairing = std::max(max_pairing, pairing(lam, b));
    for (int e = 0;; ++e) {
        long step = wall_step(l, p, e);
        if (e > 0 && (p == 0 || step > max_pairing)) break;
        for (Root beta : kPositiveRoots) {
            auto k = root_multiple(lam, mu, beta);
            if (!k || *k <= 0) continue;
            long wall = pairing(lam, beta) - *k;
            if (floor_mod(wall, step) != 0) continue;
            HomWitness w{beta, wall / step, e};
            if (witness_valid(lam, mu, w, l, p)) return w;
        }
    }
    return std::nullopt;
}

std::vector<std::pair<Weight, HomWitness>> enumerate_hom_targets(Weight lam, int l, int p, int box) {
    std::vector<std::pair<Weight, HomWitness>> out;
    for (int a = 0; a <= box; ++a)
        for (int b = 0; b <= box; ++b)
            if (auto w = hom_exists_mirror(lam, {a, b}, l, p)) out.emplace_back(Weight{a, b}, *w);
    return out;
}

Weight zhat_head_weight(Weight lam, int l) {
    // Head of Z^(lam) is the dual of the socle of Z^(2(l-1)rho - lam).
    auto d = decompose(long(2 * (l - 1)) * kRho - lam, l);
    return dual_weight(d.restricted) - long(l) * d.classical;
}

Weight nabla_g1_head_weight(Weight lam, int l) {
    if (!is_dominant(lam)) throw DomainError("nabla_g1_head_weight: non-dominant weight " + to_string(lam));
    auto r = decompose(lam, l).restricted;
    Weight eta = lam - long(r.a + r.b + 2) * kRho;
    if (!is_dominant(eta))
        throw DomainError("nabla_g1_head_weight: " + to_string(lam) + " - (r+s+2)rho = " + to_string(eta) +
                          " is not dominant");
    return eta;
}

}  // namespace qgl3
