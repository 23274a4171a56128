#include "qgl3/charring.hpp"

#include <filesystem>

#include "oracles.hpp"
#include "support.hpp"

using namespace qgl3;
using qgl3::test::kLevels;

namespace {

FormalChar from_terms(std::initializer_list<std::pair<Weight, std::int64_t>> terms) {
    FormalChar x;
    for (auto& [w, c] : terms) x.add(w, c);
    return x;
}

FormalChar reflect_support(const FormalChar& x, Root simple) {
    return x.mapped([simple](Weight w) { return reflect_ordinary(w, simple); });
}

}  // namespace

TEST_CASE("ring operations") {
    FormalChar x = FormalChar::e({1, 0}) + FormalChar::e({0, 1}, 2);
    CHECK(FormalChar::e({0, 0}) * x == x);
    CHECK(FormalChar::e({1, 0}) * FormalChar::e({-1, 1}) == FormalChar::e({0, 1}));
    CHECK((x - x).empty());
    CHECK((2 * x).coeff({0, 1}) == 4);
    FormalChar y = FormalChar::e({2, -1}, -1);
    CHECK(x * y == y * x);
    CHECK((x + y) * x == x * x + y * x);
    CHECK(weyl_char({1, 0}) * weyl_char({0, 1}) == weyl_char({1, 1}) + weyl_char({0, 0}));
}

TEST_CASE("weyl characters against the pattern oracle") {
    CHECK(weyl_char({0, 0}) == FormalChar::e({0, 0}));
    FormalChar adjoint = from_terms({{{1, 1}, 1}, {{2, -1}, 1}, {{-1, 2}, 1}, {{0, 0}, 2},
                                     {{1, -2}, 1}, {{-2, 1}, 1}, {{-1, -1}, 1}});
    CHECK(weyl_char({1, 1}) == adjoint);
    CHECK(weyl_char({3, 3}).dimension() == 64);
    for (int a = 0; a <= 7; ++a)
        for (int b = 0; b <= 7; ++b) {
            FormalChar w = weyl_char({a, b});
            CHECK(w == oracle::gt_weyl_char({a, b}));
            CHECK(w.coeff({a, b}) == 1);
            CHECK(is_weyl_invariant(w));
        }
    CHECK_THROWS_AS(weyl_char({-1, 0}), DomainError);
}

TEST_CASE("alternating sums are antisymmetric") {
    CHECK(alt_weyl_sum({1, 1}).size() == 6);
    for (int a = -3; a <= 4; ++a)
        for (int b = -3; b <= 4; ++b) {
            FormalChar x = alt_weyl_sum({a, b});
            for (Root s : {Root::Alpha1, Root::Alpha2}) {
                FormalChar neg = x;
                neg *= -1;
                CHECK(reflect_support(x, s) == neg);
            }
            if (a == 0 || b == 0 || a + b == 0) CHECK(x.empty());
        }
}

TEST_CASE("euler characters") {
    CHECK(euler_char({1, -1}).empty());
    CHECK(euler_char({2, 3}) == weyl_char({2, 3}));
    CHECK(euler_char({-2, 1}) == -1 * weyl_char({0, 0}));
    for (int a = -6; a <= 6; ++a)
        for (int b = -6; b <= 6; ++b) CHECK(euler_char({a, b}) == oracle::euler({a, b}));
}

TEST_CASE("frobenius twist") {
    CHECK(frobenius_twist(FormalChar::e({1, 0}), 3) == FormalChar::e({3, 0}));
    CHECK(frobenius_twist(weyl_char({0, 0}), 5) == weyl_char({0, 0}));
    CHECK(frobenius_twist(weyl_char({1, 0}), 2) == from_terms({{{2, 0}, 1}, {{-2, 2}, 1}, {{0, -2}, 1}}));
    FormalChar x = weyl_char({1, 0}), y = weyl_char({1, 1});
    CHECK(frobenius_twist(x * y, 3) == frobenius_twist(x, 3) * frobenius_twist(y, 3));
    CHECK(frobenius_twist(y, 3).dimension() == y.dimension());
}

TEST_CASE("weyl expansion inverts weyl characters") {
    FormalChar x = weyl_char({2, 1}) + 3 * weyl_char({0, 0}) - weyl_char({1, 1});
    auto m = weyl_expand(x);
    CHECK(m.size() == 3);
    CHECK(m[Weight{2, 1}] == 1);
    CHECK(m[Weight{0, 0}] == 3);
    CHECK(m[Weight{1, 1}] == -1);
    CHECK_THROWS(weyl_expand(FormalChar::e({1, 0})));
    // Agreement with the alternating-sum multiplicity oracle on tensor products.
    FormalChar t = weyl_char({2, 1}) * weyl_char({1, 2});
    for (auto& [w, k] : weyl_expand(t)) CHECK(oracle::weyl_multiplicity(t, w) == k);
}

TEST_CASE("restricted simple characters") {
    FormalChar seven = from_terms({{{1, 1}, 1}, {{2, -1}, 1}, {{1, -2}, 1}, {{-1, -1}, 1},
                                   {{-2, 1}, 1}, {{-1, 2}, 1}, {{0, 0}, 1}});
    CHECK(restricted_simple_char({1, 1}, 3) == seven);
    for (int l : kLevels) {
        CHECK(restricted_simple_char({l - 1, l - 1}, l) == weyl_char({l - 1, l - 1}));
        CHECK(restricted_simple_char({l - 1, l - 1}, l).dimension() == std::int64_t(l) * l * l);
        CHECK(restricted_simple_char({0, 0}, l) == FormalChar::e({0, 0}));
        for (int r = 0; r < l; ++r)
            for (int s = 0; s < l; ++s) {
                FormalChar x = restricted_simple_char({r, s}, l);
                CHECK(x.coeff({r, s}) == 1);
                CHECK(is_weyl_invariant(x));
                for (auto& [w, c] : x.terms()) CHECK(c > 0);
                CHECK(dual_char(x) == restricted_simple_char({s, r}, l));
            }
    }
    CHECK_THROWS_AS(restricted_simple_char({3, 0}, 3), DomainError);
}

TEST_CASE("small induced modules have two composition factors") {
    CHECK(small_nabla_factors({1, 1}, 3) == std::vector<Weight>{{1, 1}, {0, 0}});
    CHECK(small_nabla_factors({3, 0}, 3) == std::vector<Weight>{{3, 0}, {1, 1}});
    for (int l : kLevels) CHECK(small_nabla_factors({l - 1, 0}, l) == std::vector<Weight>{{l - 1, 0}});
    // Composition factors account for the whole character.
    for (int l : kLevels)
        for (int a = 0; a < 2 * l; ++a)
            for (int b = 0; b < 2 * l; ++b) {
                std::vector<Weight> fs;
                try {
                    fs = small_nabla_factors({a, b}, l);
                } catch (const DomainError&) {
                    continue;
                }
                FormalChar sum;
                for (Weight f : fs) sum += simple_char_p0(f, l);
                CHECK(sum == weyl_char({a, b}));
            }
    CHECK_THROWS_AS(small_nabla_factors({9, 9}, 3), DomainError);
}

TEST_CASE("chi_l") {
    CHECK(chi_l({3, -3}, 3).empty());
    CHECK(chi_l({1, 1}, 3) == restricted_simple_char({1, 1}, 3));
    CHECK(chi_l({4, 1}, 3).dimension() == 21);
}

TEST_CASE("simple characters at p = 0") {
    CHECK(simple_char_p0({3, 3}, 3) == frobenius_twist(weyl_char({1, 1}), 3));
    CHECK(simple_char_p0({4, 4}, 3).dimension() == 56);
    CHECK(simple_char_p0({2, 0}, 5) == restricted_simple_char({2, 0}, 5));
    CHECK_THROWS_AS(simple_char_p0({1, 1}, 3, 2), DomainError);
}

TEST_CASE("duality") {
    CHECK(dual_char(weyl_char({1, 0})) == weyl_char({0, 1}));
    CHECK(dual_char(weyl_char({1, 1})) == weyl_char({1, 1}));
    CHECK(dual_char(FormalChar::e({2, -1})) == FormalChar::e({-1, 2}));
    FormalChar x = weyl_char({3, 1}) + FormalChar::e({4, -7});
    CHECK(dual_char(dual_char(x)) == x);
}

TEST_CASE("simple character cache persists as JSON") {
    auto& table = SimpleCharTable::instance();
    table.get({1, 2}, 5);
    auto path = std::filesystem::temp_directory_path() / "qgl3_cache_test.json";
    REQUIRE(table.save_file(path.string()));
    auto text = table.to_json();
    table.merge_json(text);  // idempotent
    CHECK(table.to_json() == text);
    CHECK(table.load_file(path.string()));
    std::filesystem::remove(path);
    CHECK_FALSE(table.load_file((std::filesystem::temp_directory_path() / "qgl3_missing.json").string()));
}
