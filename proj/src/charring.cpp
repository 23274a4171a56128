#include "qgl3/charring.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace qgl3 {

FormalChar FormalChar::e(Weight w, std::int64_t c) {
    FormalChar x;
    x.add(w, c);
    return x;
}

std::int64_t FormalChar::coeff(Weight w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

void FormalChar::add(Weight w, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::int64_t FormalChar::dimension() const {
    std::int64_t d = 0;
    for (auto& [w, c] : terms_) d += c;
    return d;
}

FormalChar& FormalChar::operator+=(const FormalChar& o) {
    for (auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

FormalChar& FormalChar::operator-=(const FormalChar& o) {
    for (auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

FormalChar& FormalChar::operator*=(std::int64_t k) {
    if (k == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= k;
    return *this;
}

FormalChar FormalChar::shifted(Weight s) const {
    FormalChar out;
    for (auto& [w, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), w + s, c);
    return out;
}

std::string FormalChar::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [w, c] : terms_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        auto m = c < 0 ? -c : c;
        if (m != 1) os << m << "*";
        os << "e" << qgl3::to_string(w);
    }
    return os.str();
}

FormalChar operator+(FormalChar x, const FormalChar& y) { return x += y; }
FormalChar operator-(FormalChar x, const FormalChar& y) { return x -= y; }
FormalChar operator*(std::int64_t k, FormalChar x) { return x *= k; }

FormalChar operator*(const FormalChar& x, const FormalChar& y) {
    std::unordered_map<Weight, std::int64_t, WeightHash> acc;
    acc.reserve(x.size() * y.size());
    for (auto& [u, c] : x.terms())
        for (auto& [v, d] : y.terms()) acc[u + v] += c * d;
    FormalChar out;
    for (auto& [w, c] : acc) out.add(w, c);
    return out;
}

namespace {

// Number of ways to write nu as a non-negative combination of the positive roots.
std::int64_t kostant_partition(Weight nu) {
    long x3 = 2L * nu.a + nu.b, y3 = long(nu.a) + 2L * nu.b;
    if (x3 % 3 != 0 || y3 % 3 != 0) return 0;
    long x = x3 / 3, y = y3 / 3;
    if (x < 0 || y < 0) return 0;
    return std::min(x, y) + 1;
}

struct SignedWeight {
    int sign;
    Weight w;
};

Weight s1(Weight w) { return reflect_ordinary(w, Root::Alpha1); }
Weight s2(Weight w) { return reflect_ordinary(w, Root::Alpha2); }

std::array<SignedWeight, 6> weyl_orbit(Weight v) {
    return {{{1, v}, {-1, s1(v)}, {-1, s2(v)}, {1, s1(s2(v))}, {1, s2(s1(v))}, {-1, s1(s2(s1(v)))}}};
}

FormalChar kostant_weyl(Weight lam) {
    auto orbit = weyl_orbit(lam + kRho);
    FormalChar out;
    const int n = lam.a + lam.b;
    // Dominant weights of the module, then their W-orbits.
    for (int x = 0; x <= n; ++x) {
        for (int y = 0; y <= n; ++y) {
            Weight mu = lam - (long(x) * root_vector(Root::Alpha1)) - (long(y) * root_vector(Root::Alpha2));
            if (!is_dominant(mu)) continue;
            std::int64_t m = 0;
            for (auto& [sg, w] : orbit) m += sg * kostant_partition(w - (mu + kRho));
            if (m == 0) continue;
            std::array<Weight, 6> images{mu, s1(mu), s2(mu), s1(s2(mu)), s2(s1(mu)), s1(s2(s1(mu)))};
            std::sort(images.begin(), images.end());
            auto end = std::unique(images.begin(), images.end());
            for (auto it = images.begin(); it != end; ++it) out.add(*it, m);
        }
    }
    return out;
}

class WeylCache {
public:
    FormalChar get(Weight lam) {
        {
            std::shared_lock lock(mu_);
            auto it = cache_.find(lam);
            if (it != cache_.end()) return it->second;
        }
        FormalChar c = kostant_weyl(lam);
        std::unique_lock lock(mu_);
        return cache_.emplace(lam, std::move(c)).first->second;
    }

private:
    std::shared_mutex mu_;
    std::unordered_map<Weight, FormalChar, WeightHash> cache_;
};

WeylCache& weyl_cache() {
    static WeylCache cache;
    return cache;
}

}  // namespace

FormalChar weyl_char(Weight lam) {
    if (!is_dominant(lam)) throw DomainError("weyl_char: non-dominant weight " + to_string(lam));
    return weyl_cache().get(lam);
}

FormalChar weyl_char_tableaux(Weight lam) {
    if (!is_dominant(lam)) throw DomainError("weyl_char_tableaux: non-dominant weight " + to_string(lam));
    const int row1 = lam.a + lam.b, row2 = lam.b;
    FormalChar out;
    // Row 1 holds n1 ones, n2 twos, n3 threes; row 2 holds m2 twos, m3 threes.
    for (int n1 = 0; n1 <= row1; ++n1)
        for (int n2 = 0; n1 + n2 <= row1; ++n2) {
            int n3 = row1 - n1 - n2;
            if (row2 > n1 + n2) continue;
            for (int m2 = 0; m2 <= std::min(row2, n1); ++m2) {
                int m3 = row2 - m2;
                int c1 = n1, c2 = n2 + m2, c3 = n3 + m3;
                out.add({c1 - c2, c2 - c3}, 1);
            }
        }
    return out;
}

std::int64_t weyl_dimension(Weight lam) {
    return std::int64_t(lam.a + 1) * (lam.b + 1) * (lam.a + lam.b + 2) / 2;
}

FormalChar alt_weyl_sum(Weight mu) {
    FormalChar out;
    for (auto& [sg, w] : weyl_orbit(mu)) out.add(w, sg);
    return out;
}

FormalChar euler_char(Weight mu) {
    auto d = dominantize(mu);
    if (d.sign == 0) return {};
    return std::int64_t(d.sign) * weyl_char(d.rep);
}

FormalChar frobenius_twist(const FormalChar& x, int l) {
    return x.mapped([l](Weight w) { return long(l) * w; });
}

FormalChar dual_char(const FormalChar& x) { return x.mapped(dual_weight); }

std::map<Weight, std::int64_t> weyl_expand(FormalChar x) {
    std::map<Weight, std::int64_t> out;
    while (!x.empty()) {
        const Weight* top = nullptr;
        for (auto& [w, c] : x.terms()) {
            if (!is_dominant(w)) continue;
            if (!top || w.a + w.b > top->a + top->b || (w.a + w.b == top->a + top->b && w.a > top->a)) top = &w;
        }
        if (!top) throw DomainError("weyl_expand: character is not W-invariant");
        Weight hw = *top;
        std::int64_t k = x.coeff(hw);
        out[hw] += k;
        x -= k * weyl_char(hw);
    }
    return out;
}

bool is_weyl_invariant(const FormalChar& x) {
    for (auto& [w, c] : x.terms())
        if (x.coeff(s1(w)) != c || x.coeff(s2(w)) != c) return false;
    return true;
}

// ---------------------------------------------------------------------------

namespace {

FormalChar compute_restricted_simple(Weight lam, int l) {
    if (restricted_facet(lam, l) == FacetType::UpAlcove) {
        Weight low{l - 2 - lam.b, l - 2 - lam.a};
        return weyl_char(lam) - weyl_char(low);
    }
    return weyl_char(lam);
}

nlohmann::json char_to_json(const FormalChar& x) {
    auto arr = nlohmann::json::array();
    for (auto& [w, c] : x.terms()) arr.push_back({w.a, w.b, c});
    return arr;
}

}  // namespace

SimpleCharTable& SimpleCharTable::instance() {
    static SimpleCharTable table;
    return table;
}

FormalChar SimpleCharTable::get(Weight lam, int l) {
    auto key = std::make_pair(l, lam);
    {
        std::shared_lock lock(mu_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    FormalChar c = compute_restricted_simple(lam, l);
    std::unique_lock lock(mu_);
    return cache_.emplace(key, std::move(c)).first->second;
}

std::size_t SimpleCharTable::size() const {
    std::shared_lock lock(mu_);
    return cache_.size();
}

std::string SimpleCharTable::to_json() const {
    std::shared_lock lock(mu_);
    auto entries = nlohmann::json::array();
    for (auto& [key, ch] : cache_)
        entries.push_back({{"l", key.first}, {"weight", {key.second.a, key.second.b}}, {"char", char_to_json(ch)}});
    return nlohmann::json{{"entries", entries}}.dump();
}

void SimpleCharTable::merge_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::unique_lock lock(mu_);
    for (auto& e : j.at("entries")) {
        int l = e.at("l").get<int>();
        Weight w{e.at("weight").at(0).get<int>(), e.at("weight").at(1).get<int>()};
        if (l < 2 || !is_restricted(w, l)) continue;
        FormalChar ch;
        for (auto& t : e.at("char")) ch.add({t.at(0).get<int>(), t.at(1).get<int>()}, t.at(2).get<std::int64_t>());
        cache_.try_emplace({l, w}, std::move(ch));
    }
}

bool SimpleCharTable::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) return false;
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        merge_json(ss.str());
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

bool SimpleCharTable::save_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) return false;
    out << to_json();
    return bool(out);
}

FormalChar restricted_simple_char(Weight lam, int l) {
    require_level(l);
    if (!is_restricted(lam, l))
        throw DomainError("restricted_simple_char: " + to_string(lam) + " is not restricted for l=" + std::to_string(l));
    return SimpleCharTable::instance().get(lam, l);
}

std::vector<Weight> small_nabla_factors(Weight lam, int l) {
    require_level(l);
    auto in_upper_closed_C = [l](Weight w) { return w.a >= 0 && w.b >= 0 && w.a + w.b <= l - 2; };
    if (in_upper_closed_C(lam) || (lam.a == l - 1 && lam.b >= 0 && lam.b <= l - 1) ||
        (lam.b == l - 1 && lam.a >= 0 && lam.a <= l - 1))
        return {lam};
    if (is_restricted(lam, l) && restricted_facet(lam, l) == FacetType::UpAlcove)
        return {lam, {l - 2 - lam.b, l - 2 - lam.a}};
    Weight rs1 = lam - Weight{l, 0};
    if (in_upper_closed_C(rs1)) return {lam, {l - rs1.a - 2, rs1.a + rs1.b + 1}};
    Weight rs2 = lam - Weight{0, l};
    if (in_upper_closed_C(rs2)) return {lam, {rs2.a + rs2.b + 1, l - rs2.b - 2}};
    throw DomainError("small_nabla_factors: " + to_string(lam) +
                      " is in none of the ranges (r,s), (l-1,r), (r,l-1), (l-s-2,l-r-2), l(1,0)+(r,s), l(0,1)+(r,s)");
}

FormalChar chi_l(Weight mu, int l) {
    auto d = decompose(mu, l);
    FormalChar classical = euler_char(d.classical);
    if (classical.empty()) return {};
    return frobenius_twist(classical, l) * restricted_simple_char(d.restricted, l);
}

FormalChar simple_char_p0(Weight lam, int l, int p) {
    if (p != 0) throw DomainError("simple_char_p0: classical simple characters are only available for p = 0");
    if (!is_dominant(lam)) throw DomainError("simple_char_p0: non-dominant weight " + to_string(lam));
    auto d = decompose(lam, l);
    return frobenius_twist(weyl_char(d.classical), l) * restricted_simple_char(d.restricted, l);
}

}  // namespace qgl3
