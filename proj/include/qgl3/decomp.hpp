#pragma once

#include <string>
#include <vector>

#include "qgl3/charring.hpp"

namespace qgl3 {

struct DecompResult {
    Weight lam;
    int l = 2;
    FacetType facet = FacetType::Vertex;
    std::string case_id;          // "i" .. "vi"
    std::vector<Weight> factors;  // raw list, vanishing terms included
    std::vector<bool> nonzero;    // chi_l(factor) != 0

    bool operator==(const DecompResult&) const = default;

    /// Factors with non-zero chi_l.
    std::vector<Weight> filtered() const;
    /// Indices of factors that are genuine modules and survive cancellation
    /// of virtual terms against one another.
    std::vector<std::size_t> effective_indices() const;
};

const char* case_id_for(FacetType f);

DecompResult chi_decomposition(Weight lam, int l);
FormalChar decomposition_char(const DecompResult& d);

/// Composition factors of Z^(lam) as a G1B-module.
std::vector<Weight> zhat_factors(Weight lam, int l);
FormalChar zhat_char(Weight lam, int l);
/// Character of the simple G1B-module L^(nu).
FormalChar lhat_char(Weight nu, int l);

FormalChar nabla_l_char(Weight mu, int l);

}  // namespace qgl3
