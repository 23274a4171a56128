#include "qgl3/ext.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <utility>

#include "qgl3/decomp.hpp"

namespace qgl3 {

std::string ext_label(Weight w) {
    if (w == Weight{0, 0}) return "k";
    return "nabla(" + std::to_string(w.a) + "," + std::to_string(w.b) + ")";
}

Weight parse_ext_label(const std::string& label) {
    if (label == "k") return {0, 0};
    int a = 0, b = 0;
    char tail = 0;
    if (label.rfind("nabla(", 0) == 0 && std::sscanf(label.c_str(), "nabla(%d,%d%c", &a, &b, &tail) == 3 &&
        tail == ')' && is_dominant({a, b}))
        return {a, b};
    throw DomainError("bad Ext label '" + label + "'");
}

ExtValue ExtValue::from_parts(std::vector<Weight> parts) {
    for (auto& w : parts)
        if (!is_dominant(w)) throw DomainError("ExtValue: non-dominant part " + to_string(w));
    std::sort(parts.begin(), parts.end(), [](Weight x, Weight y) { return ext_label(x) < ext_label(y); });
    return {std::move(parts)};
}

ExtValue ExtValue::from_labels(const std::vector<std::string>& labels) {
    std::vector<Weight> parts;
    for (auto& s : labels) parts.push_back(parse_ext_label(s));
    return from_parts(std::move(parts));
}

std::vector<std::string> ExtValue::labels() const {
    std::vector<std::string> out;
    for (auto& w : parts) out.push_back(ext_label(w));
    return out;
}

std::string ExtValue::to_text() const {
    if (parts.empty()) return "0";
    std::string out;
    for (auto& w : parts) {
        if (!out.empty()) out += " + ";
        out += w == Weight{0, 0} ? "k" : ext_label(w) + "^F";
    }
    return out;
}

FormalChar ExtValue::realize() const {
    FormalChar sum;
    for (auto& w : parts) sum += weyl_char(w);
    return sum;
}

ExtValue ExtValue::dual() const {
    std::vector<Weight> d;
    for (auto& w : parts) d.push_back(dual_weight(w));
    return from_parts(std::move(d));
}

ExtValue ext1_g1(Weight alpha, Weight beta, int l) {
    require_level(l);
    if (!is_restricted(alpha, l) || !is_restricted(beta, l))
        throw DomainError("ext1_g1: " + to_string(alpha) + ", " + to_string(beta) + " must be restricted for l=" +
                          std::to_string(l));
    const Weight k{0, 0}, n01{0, 1}, n10{1, 0};
    std::vector<Weight> parts;
    // Horizontal-wall triples.
    for (int r = 0; r <= l - 2; ++r) {
        int s = l - 2 - r;
        Weight t0{r, s}, t1{l - 1, r}, t2{s, l - 1};
        const std::pair<std::pair<Weight, Weight>, Weight> entries[] = {
            {{t0, t1}, n01}, {{t0, t2}, n10}, {{t1, t0}, n10}, {{t2, t0}, n01}};
        for (auto& [key, v] : entries)
            if (key.first == alpha && key.second == beta) parts.push_back(v);
    }
    // Alcove pairs; coinciding columns add up, which yields the l = 3 value.
    for (int r = 0; r <= l - 3; ++r)
        for (int s = 0; r + s <= l - 3; ++s) {
            Weight down{r, s}, up{l - s - 2, l - r - 2};
            if (alpha == down) {
                const std::pair<Weight, Weight> cols[] = {
                    {up, k}, {{r + s + 1, l - s - 2}, n01}, {{l - r - 2, r + s + 1}, n10}};
                for (auto& [c, v] : cols)
                    if (beta == c) parts.push_back(v);
            }
            if (alpha == up) {
                const std::pair<Weight, Weight> cols[] = {
                    {down, k}, {{s, l - r - s - 3}, n01}, {{l - r - s - 3, r}, n10}};
                for (auto& [c, v] : cols)
                    if (beta == c) parts.push_back(v);
            }
        }
    return ExtValue::from_parts(std::move(parts));
}

namespace {

using Entry = std::pair<int, int>;  // 1-based (row, column)

struct G1BTable {
    std::vector<Weight> columns;
    std::set<Entry> entries;
};

G1BTable g1b_table(Weight mu, int l) {
    auto [cl, rs] = decompose(mu, l);
    const int a = cl.a, b = cl.b;
    auto W = [l](Weight c, Weight r) { return compose(c, r, l); };
    G1BTable t;
    switch (restricted_facet(mu, l)) {
    case FacetType::Vertex:
        t.columns = {mu};
        break;
    case FacetType::RightWall: {
        int r = rs.b, s = l - r - 2;
        t.columns = {mu, W({a - 1, b}, {r, s}), W({a + 1, b - 1}, {r, s}), W({a, b - 1}, {s, l - 1})};
        t.entries = {{2, 1}, {3, 2}, {4, 3}};
        break;
    }
    case FacetType::LeftWall: {
        int s = rs.a, r = l - s - 2;
        t.columns = {mu, W({a, b - 1}, {r, s}), W({a - 1, b + 1}, {r, s}), W({a - 1, b}, {l - 1, r})};
        t.entries = {{2, 1}, {3, 2}, {4, 3}};
        break;
    }
    case FacetType::HorizontalWall: {
        int r = rs.a, s = rs.b;
        t.columns = {mu, W({a, b - 1}, {l - 1, r}), W({a - 1, b}, {s, l - 1}), W({a - 1, b - 1}, {r, s})};
        t.entries = {{2, 1}, {3, 1}, {4, 2}, {4, 3}};
        break;
    }
    case FacetType::DownAlcove:
        t.columns = zhat_factors(mu, l);
        t.entries = {{2, 1}, {2, 6}, {3, 2}, {4, 1}, {4, 8}, {5, 4}, {6, 2}, {6, 5},
                     {7, 2}, {7, 4}, {7, 9}, {8, 3}, {8, 4}, {9, 6}, {9, 7}, {9, 8}};
        break;
    case FacetType::UpAlcove:
        t.columns = zhat_factors(mu, l);
        // The row of mu itself has only the entry in column 7 (see the general proposition).
        t.entries = {{1, 7}, {2, 1}, {2, 5}, {2, 8}, {3, 2}, {3, 9}, {4, 8}, {5, 2},
                     {5, 4}, {6, 5}, {7, 4}, {7, 9}, {8, 4}, {9, 6}, {9, 7}, {9, 8}};
        break;
    }
    return t;
}

}  // namespace

std::vector<Weight> g1b_table_columns(Weight mu, int l) {
    require_level(l);
    return g1b_table(mu, l).columns;
}

int ext1_g1b(Weight mu, Weight lam, Weight eta, int l) {
    require_level(l);
    auto t = g1b_table(mu, l);
    auto index = [&](Weight w) -> int {
        auto it = std::find(t.columns.begin(), t.columns.end(), w);
        if (it == t.columns.end()) {
            std::string valid;
            for (auto& c : t.columns) valid += (valid.empty() ? "" : " ") + to_string(c);
            throw DomainError("ext1_g1b: " + to_string(w) + " is not a composition factor of Z^" + to_string(mu) +
                              "; valid factors: " + valid);
        }
        return int(it - t.columns.begin()) + 1;
    };
    return t.entries.count({index(lam), index(eta)}) ? 1 : 0;
}

namespace {

void require_p0(int p, const char* op) {
    if (p != 0) throw DomainError(std::string(op) + ": only p = 0 is supported");
}

}  // namespace

int ext1_g1b_general(Weight lam, Weight mu, int l, int p) {
    require_p0(p, "ext1_g1b_general");
    require_level(l);
    auto dl = decompose(lam, l), dm = decompose(mu, l);
    Weight d = dm.classical - dl.classical;
    if (is_dominant(d)) {
        if (dl.restricted == dm.restricted) return 0;
        ExtValue e = ext1_g1(dl.restricted, dm.restricted, l);
        if (e.is_zero()) return 0;
        auto mult = weyl_expand(e.realize() * weyl_char(d));
        auto it = mult.find({0, 0});
        return it == mult.end() ? 0 : int(it->second);
    }
    if (dl.restricted != dm.restricted) return 0;
    // d = -l^i * alpha for a simple root alpha
    for (Root r : {Root::Alpha1, Root::Alpha2}) {
        Weight v = root_vector(r);
        for (long scale = 1; scale <= std::labs(d.a) + std::labs(d.b); scale *= l)
            if (d == -(scale * v)) return 1;
    }
    return 0;
}

int ext1_g(Weight mu, Weight lam, int l, int p) {
    require_p0(p, "ext1_g");
    require_level(l);
    if (!is_dominant(mu) || !is_dominant(lam)) throw DomainError("ext1_g: weights must be dominant");
    auto dm = decompose(mu, l), dl = decompose(lam, l);
    // Equal restricted parts reduce to the classical quotient, semisimple at p = 0.
    if (dm.restricted == dl.restricted) return 0;
    ExtValue e = ext1_g1(dm.restricted, dl.restricted, l);
    if (e.is_zero()) return 0;
    auto mult = weyl_expand(e.realize() * weyl_char(dl.classical));
    auto it = mult.find(dm.classical);
    return it == mult.end() ? 0 : int(it->second);
}

namespace {

struct SocleRow {
    int min_l;
    std::function<bool(int, int, int)> matches;
    std::function<std::vector<Weight>(int, int, int)> socle;
    bool reconstructed = false;
};

const std::vector<SocleRow>& socle_rows() {
    using V = std::vector<Weight>;
    static const std::vector<SocleRow> rows = {
        {2, [](int r, int s, int) { return r == 0 && s == 0; }, [](int, int, int) { return V{{1, 0}}; }},
        {4, [](int r, int s, int l) { return r == 0 && s >= 1 && s <= l - 3; },
         [](int, int s, int) { return V{{1, s}, {0, s - 1}}; }},
        {3, [](int r, int s, int l) { return r == 0 && s == l - 2; }, [](int, int, int l) { return V{{0, l - 3}}; }},
        {4, [](int r, int s, int l) { return r >= 1 && r <= l - 3 && r + s == l - 2; },
         [](int r, int s, int) { return V{{r, s - 1}, {r - 1, s + 1}}; }},
        {3, [](int r, int s, int l) { return s == 0 && r >= 1 && r <= l - 2; },
         [](int r, int, int) { return V{{r + 1, 0}, {r - 1, 1}}; }},
        {4, [](int r, int s, int l) { return r >= 1 && s >= 1 && r + s <= l - 3; },
         [](int r, int s, int) { return V{{r + 1, s}, {r - 1, s + 1}, {r, s - 1}}; }},
        {2, [](int r, int s, int l) { return r == 0 && s == l - 1; },
         [](int, int, int l) { return V{{1, l - 1}, {0, l - 2}}; }, true},
        {3, [](int r, int s, int l) { return r >= 1 && r <= l - 2 && s == l - 1; },
         [](int r, int, int l) { return V{{r + 1, l - 1}, {r, l - 2}}; }},
        {2, [](int r, int s, int l) { return r == l - 1 && s == l - 1; },
         [](int, int, int l) { return V{{l - 1, l - 2}}; }},
        {3, [](int r, int s, int l) { return r == 1 && s == l - 2; },
         [](int, int, int l) { return V{{2, l - 2}, {0, l - 1}}; }},
        // The printed third summand (r-1,l-3) is not a weight of L(1,0) (x) L(r,l-2);
        // (r-1,l-1) is, and agrees with the overlapping row (l-2,s) at r = l-2.
        {4, [](int r, int s, int l) { return r >= 2 && r <= l - 2 && s == l - 2; },
         [](int r, int, int l) { return V{{r + 1, l - 2}, {r, l - 3}, {r - 1, l - 1}}; }},
        {4, [](int r, int s, int l) { return r >= 2 && r <= l - 3 && r + s == l - 1; },
         [](int r, int s, int) { return V{{r + 1, s}, {r - 1, s + 1}}; }},
        {4, [](int r, int s, int l) { return r == l - 2 && s == 1; },
         [](int, int, int l) { return V{{l - 1, 1}, {l - 3, 2}}; }},
        {2, [](int r, int s, int l) { return r == l - 1 && s == 0; }, [](int, int, int l) { return V{{l - 2, 1}}; }},
        {3, [](int r, int s, int l) { return r == l - 1 && s >= 1 && s <= l - 2; },
         [](int, int s, int l) { return V{{l - 2, s + 1}, {l - 1, s - 1}}; }},
        {4, [](int r, int s, int l) { return r == l - 2 && s >= 2 && s <= l - 2; },
         [](int, int s, int l) { return V{{l - 1, s}, {l - 2, s - 1}, {l - 3, s + 1}}; }},
        {4, [](int r, int s, int l) { return r + s >= l && r <= l - 3 && s <= l - 3; },
         [](int r, int s, int) { return V{{r + 1, s}, {r - 1, s + 1}, {r, s - 1}}; }},
    };
    return rows;
}

const SocleRow& find_socle_row(Weight lr, int l) {
    const SocleRow* any = nullptr;
    for (auto& row : socle_rows()) {
        if (!row.matches(lr.a, lr.b, l)) continue;
        if (l >= row.min_l) return row;
        any = &row;
    }
    if (any)
        throw DomainError("socle_fundamental_tensor: the row for " + to_string(lr) + " requires l >= " +
                          std::to_string(any->min_l));
    throw DomainError("socle_fundamental_tensor: no table row for " + to_string(lr) + " at l=" + std::to_string(l));
}

Weight normalize_which(Weight which) {
    if (which != Weight{1, 0} && which != Weight{0, 1})
        throw DomainError("socle_fundamental_tensor: which must be (1,0) or (0,1)");
    return which;
}

}  // namespace

std::vector<Weight> socle_fundamental_tensor(Weight lam, int l, Weight which) {
    require_level(l);
    if (!is_dominant(lam)) throw DomainError("socle_fundamental_tensor: non-dominant weight " + to_string(lam));
    bool dualize = normalize_which(which) == Weight{0, 1};
    auto d = decompose(lam, l);
    Weight key = dualize ? dual_weight(d.restricted) : d.restricted;
    auto& row = find_socle_row(key, l);
    std::vector<Weight> out;
    for (Weight w : row.socle(key.a, key.b, l)) {
        if (dualize) w = dual_weight(w);
        out.push_back(w + long(l) * d.classical);
    }
    return out;
}

bool socle_row_reconstructed(Weight lr, int l, Weight which) {
    Weight key = normalize_which(which) == Weight{0, 1} ? dual_weight(lr) : lr;
    return find_socle_row(key, l).reconstructed;
}

}  // namespace qgl3
