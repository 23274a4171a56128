#pragma once

#include <string>
#include <vector>

#include "qgl3/charring.hpp"

namespace qgl3 {

/// Ext^1 group realized as a classical module: a multiset of twisted induced
/// modules nabla(a,b)^F, with (0,0) standing for the trivial module k.
struct ExtValue {
    std::vector<Weight> parts;  // kept sorted by label

    static ExtValue from_parts(std::vector<Weight> parts);
    static ExtValue from_labels(const std::vector<std::string>& labels);

    bool is_zero() const { return parts.empty(); }
    std::vector<std::string> labels() const;
    /// e.g. "k + nabla(0,1)^F", or "0".
    std::string to_text() const;
    /// Classical (untwisted) character.
    FormalChar realize() const;
    /// Swap nabla(a,b) with nabla(b,a).
    ExtValue dual() const;

    bool operator==(const ExtValue&) const = default;
};

std::string ext_label(Weight w);
Weight parse_ext_label(const std::string& label);

ExtValue ext1_g1(Weight alpha, Weight beta, int l);

/// Composition factors of Z^(mu) in the order used by the G1B extension tables.
std::vector<Weight> g1b_table_columns(Weight mu, int l);

/// Dimension of Ext^1_{G1B}(L^(lam), L^(eta)) for two factors of Z^(mu).
int ext1_g1b(Weight mu, Weight lam, Weight eta, int l);
int ext1_g1b_general(Weight lam, Weight mu, int l, int p = 0);
int ext1_g(Weight mu, Weight lam, int l, int p = 0);

/// G-socle of L(1,0) (x) L(lam) (which = (1,0)) or L(0,1) (x) L(lam) (which = (0,1)).
std::vector<Weight> socle_fundamental_tensor(Weight lam, int l, Weight which);
/// True for the one table row whose printed entry had to be reconstructed.
bool socle_row_reconstructed(Weight lam_restricted, int l, Weight which);

}  // namespace qgl3
