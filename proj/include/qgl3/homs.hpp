#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qgl3/lattice.hpp"

namespace qgl3 {

/// lam and mu are mirror images in the wall pairing(., beta) = m * l * p^e.
struct HomWitness {
    Root beta = Root::Alpha1;
    long m = 0;
    int e = 0;

    bool operator==(const HomWitness&) const = default;
};

long wall_step(int l, int p, int e);

/// Checks both witness conditions for the pair (lam, mu) directly.
bool witness_valid(Weight lam, Weight mu, const HomWitness& w, int l, int p);

/// Sufficient criterion for Hom(nabla(lam), nabla(mu)) != 0; complete for p = 0.
std::optional<HomWitness> hom_exists_mirror(Weight lam, Weight mu, int l, int p = 0);

/// Sorted list of dominant mu with max(mu.a, mu.b) <= box admitting a witness.
/// Each such Hom space is at most one-dimensional.
std::vector<std::pair<Weight, HomWitness>> enumerate_hom_targets(Weight lam, int l, int p, int box);

/// Weight of the simple head of Z^(lam).
Weight zhat_head_weight(Weight lam, int l);

/// lam - (r+s+2) rho for lam' = (r,s).
Weight nabla_g1_head_weight(Weight lam, int l);

bool is_prime(int p);

}  // namespace qgl3
