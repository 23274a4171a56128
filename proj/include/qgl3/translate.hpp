#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgl3/charring.hpp"

namespace qgl3 {

struct WallTranslationResult {
    Weight input;
    std::optional<Weight> output;  // empty when the functor kills the factor
};

/// Translation of nabla_l(nu) from the orbit of lam_orbit onto the orbit of mu_orbit.
/// nu may be any weight of the orbit; non-dominant nu stand for virtual terms.
WallTranslationResult translate_onto_wall(Weight nu, Weight lam_orbit, Weight mu_orbit, int l);

struct OffWallEntry {
    Weight classical;
    Weight restricted;

    Weight weight(int l) const { return compose(classical, restricted, l); }
    /// Entries with non-dominant classical part contribute nothing.
    bool dominant() const { return is_dominant(classical); }
    bool operator==(const OffWallEntry&) const = default;
};

struct OffWallFactorList {
    std::string rule;
    std::vector<OffWallEntry> factors;  // top to bottom

    FormalChar character(int l) const;
};

/// Good l-filtration of the translate of nabla(mu'')^F (x) L(mu') off its wall
/// towards the restricted weight target.
OffWallFactorList translate_off_wall(Weight mu_classical, Weight mu_restricted, Weight target, int l);

struct WallCrossing {
    Weight lam;
    Weight mu;              // weight on a lower wall of lam's facet
    int l = 2;
    Reflection wall;        // the wall through mu
    std::vector<Weight> source_factors;
    std::vector<Weight> targets;  // restricted-part carrier for each source factor
    std::vector<OffWallFactorList> lists;

    std::size_t factor_count() const;
    FormalChar character() const;
};

/// Translates the good l-filtration of nabla(mu) off its wall towards lam.
WallCrossing translate_nabla_off_wall(Weight lam, Weight mu, int l);

/// A wall weight below lam whose factors are all in general position, if any.
std::optional<Weight> generic_wall_weight(Weight lam, int l);

/// Total number of translated factors for the generic wall weight below lam.
int translate_nabla_factor_count(Weight lam, int l);

}  // namespace qgl3
