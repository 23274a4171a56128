#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "qgl3/lattice.hpp"

namespace qgl3 {

/// Element of the group ring Z[X]; zero coefficients are never stored.
class FormalChar {
public:
    using Map = std::map<Weight, std::int64_t>;

    FormalChar() = default;
    static FormalChar e(Weight w, std::int64_t c = 1);

    std::int64_t coeff(Weight w) const;
    void add(Weight w, std::int64_t c);

    const Map& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    std::int64_t dimension() const;

    FormalChar& operator+=(const FormalChar& o);
    FormalChar& operator-=(const FormalChar& o);
    FormalChar& operator*=(std::int64_t k);
    bool operator==(const FormalChar& o) const = default;

    /// Weight shift: multiplication by e(w).
    FormalChar shifted(Weight w) const;
    /// Image under a map on weights, summing collisions.
    template <class F>
    FormalChar mapped(F f) const {
        FormalChar out;
        for (auto& [w, c] : terms_) out.add(f(w), c);
        return out;
    }

    std::string to_string() const;

private:
    Map terms_;
};

FormalChar operator+(FormalChar x, const FormalChar& y);
FormalChar operator-(FormalChar x, const FormalChar& y);
FormalChar operator*(const FormalChar& x, const FormalChar& y);
FormalChar operator*(std::int64_t k, FormalChar x);

/// Character of the induced module with highest weight lam.
/// Computed from the Kostant multiplicity formula and memoized.
FormalChar weyl_char(Weight lam);
/// Independent computation from semistandard tableaux of shape (a+b, b).
FormalChar weyl_char_tableaux(Weight lam);

std::int64_t weyl_dimension(Weight lam);

/// Sum over W of det(w) e(w mu), ordinary action.
FormalChar alt_weyl_sum(Weight mu);

FormalChar euler_char(Weight mu);
FormalChar frobenius_twist(const FormalChar& x, int l);
FormalChar dual_char(const FormalChar& x);

/// Multiplicities of Weyl characters in a W-invariant virtual character.
std::map<Weight, std::int64_t> weyl_expand(FormalChar x);

bool is_weyl_invariant(const FormalChar& x);

/// Memo table of restricted simple characters, keyed by (l, lambda').
class SimpleCharTable {
public:
    static SimpleCharTable& instance();

    FormalChar get(Weight lam, int l);
    std::size_t size() const;

    /// JSON persistence; load never overwrites present entries.
    std::string to_json() const;
    void merge_json(const std::string& text);
    bool load_file(const std::string& path);
    bool save_file(const std::string& path) const;

private:
    SimpleCharTable() = default;
    mutable std::shared_mutex mu_;
    std::map<std::pair<int, Weight>, FormalChar> cache_;
};

FormalChar restricted_simple_char(Weight lam_restricted, int l);

/// Composition factors of a small induced module, socle first.
std::vector<Weight> small_nabla_factors(Weight lam, int l);

FormalChar chi_l(Weight mu, int l);
FormalChar simple_char_p0(Weight lam, int l, int p = 0);

}  // namespace qgl3
