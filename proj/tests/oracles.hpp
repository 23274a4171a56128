#pragma once

// Reference implementations used only by the tests. They share the Weight and
// FormalChar containers with the library but none of its algorithms.

#include "qgl3/charring.hpp"

namespace oracle {

using qgl3::FormalChar;
using qgl3::Weight;

/// Weyl character by enumerating Gelfand-Tsetlin patterns of shape (a+b, b, 0).
FormalChar gt_weyl_char(Weight lam);

/// Weyl character extended to all weights with the dot-action sign rule.
FormalChar euler(Weight mu);

/// Multiplicity of the Weyl character of nu in a W-invariant character,
/// read off as the coefficient of e(nu + rho) in x * A(rho).
std::int64_t weyl_multiplicity(const FormalChar& x, Weight nu);

/// Translation of Euler characters from the orbit of mu_rep (on exactly one wall
/// of the closed fundamental alcove) to the orbit of lam_rep.
FormalChar translate_euler(const FormalChar& x, Weight mu_rep, Weight lam_rep, int l);

/// Orbit representative in the closed fundamental alcove.
Weight alcove_rep(Weight mu, int l);

}  // namespace oracle
