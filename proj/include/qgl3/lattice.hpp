#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgl3 {

/// Raised for inputs outside an operation's stated domain.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Weight in fundamental-weight coordinates: a*omega1 + b*omega2.
struct Weight {
    int a = 0;
    int b = 0;

    auto operator<=>(const Weight&) const = default;
};

inline Weight operator+(Weight x, Weight y) { return {x.a + y.a, x.b + y.b}; }
inline Weight operator-(Weight x, Weight y) { return {x.a - y.a, x.b - y.b}; }
inline Weight operator-(Weight x) { return {-x.a, -x.b}; }
inline Weight operator*(long k, Weight x) { return {int(k * x.a), int(k * x.b)}; }

std::string to_string(Weight w);

struct WeightHash {
    std::size_t operator()(Weight w) const noexcept {
        return std::hash<long long>()((static_cast<long long>(w.a) << 32) ^ static_cast<unsigned>(w.b));
    }
};

inline constexpr Weight kRho{1, 1};

enum class Root { Alpha1, Alpha2, Rho };
inline constexpr std::array<Root, 3> kPositiveRoots{Root::Alpha1, Root::Alpha2, Root::Rho};

Weight root_vector(Root r);
const char* root_name(Root r);
Root root_from_name(const std::string& name);

/// <lambda + rho, beta^vee>.
long pairing(Weight lam, Root beta);

bool is_dominant(Weight w);
bool is_restricted(Weight w, int l);
void require_level(int l);

long floor_div(long x, long m);
long floor_mod(long x, long m);

struct RestrictedDecomposition {
    Weight classical;
    Weight restricted;

    auto operator<=>(const RestrictedDecomposition&) const = default;
};

RestrictedDecomposition decompose(Weight lam, int l);
Weight compose(Weight classical, Weight restricted, int l);

/// s_{beta, m*step} . lam under the dot action.
Weight affine_reflect(Weight lam, Root beta, long m, long step);

/// Ordinary (linear) reflection s_beta.
Weight reflect_ordinary(Weight lam, Root beta);

struct Dominantized {
    int sign;
    Weight rep;
};

Dominantized dominantize(Weight lam);

enum class FacetType { Vertex, RightWall, LeftWall, HorizontalWall, DownAlcove, UpAlcove };

const char* facet_name(FacetType f);
FacetType facet_from_name(const std::string& name);

/// Facet kind of the restricted part; defined for every weight.
FacetType restricted_facet(Weight lam, int l);
FacetType facet_classify(Weight lam, int l);

Weight dual_weight(Weight lam);

/// mu <= lam in the dominance order.
bool dominance_leq(Weight mu, Weight lam);

// Affine Weyl group geometry.

struct Reflection {
    Root root;
    long wall;  // reflecting hyperplane is pairing == wall

    auto operator<=>(const Reflection&) const = default;
};

Weight apply(Reflection s, Weight lam);

struct Canonical {
    Weight rep;                    // representative in the closed fundamental alcove
    std::vector<Reflection> word;  // reflections applied to reach rep, in order
};

Canonical canonicalize(Weight lam, int l);

/// Applies the inverse of a canonicalization word: maps rep-side points back.
Weight apply_inverse(const std::vector<Reflection>& word, Weight x);

bool in_closed_fundamental_alcove(Weight lam, int l);
bool linked(Weight lam, Weight mu, int l);

/// Facet of the W_l dot-action hyperplane arrangement.
/// For roots on a wall, pairing == n*l; otherwise (n-1)*l < pairing < n*l.
struct Facet {
    int l = 2;
    std::array<bool, 3> on_wall{};
    std::array<long, 3> n{};

    bool contains(Weight x) const;
    bool in_closure(Weight x) const;
    bool in_upper_closure(Weight x) const;
    int wall_count() const;
};

Facet facet_of(Weight lam, int l);

}  // namespace qgl3
