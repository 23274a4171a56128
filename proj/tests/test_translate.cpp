#include "qgl3/translate.hpp"

#include "oracles.hpp"
#include "qgl3/decomp.hpp"
#include "support.hpp"

using namespace qgl3;
using qgl3::test::for_each_sweep_weight;
using qgl3::test::kLevels;

TEST_CASE("translation onto a wall") {
    // Identity translation.
    auto id = translate_onto_wall({1, 1}, {1, 1}, {1, 1}, 5);
    REQUIRE(id.output);
    CHECK(*id.output == Weight{1, 1});
    // Down alcove at l = 3: the origin translates onto the upper wall point in its closure.
    auto up = translate_onto_wall({0, 0}, {0, 0}, {1, 0}, 3);
    REQUIRE(up.output);
    CHECK(*up.output == Weight{1, 0});
    // Reflected copy whose image leaves the upper closure is killed.
    auto killed = translate_onto_wall({0, 0}, {0, 0}, {-1, 1}, 3);
    CHECK_FALSE(killed.output);
    CHECK_THROWS_AS(translate_onto_wall({2, 2}, {0, 0}, {1, 0}, 3), DomainError);
    CHECK_THROWS_AS(translate_onto_wall({0, 0}, {5, 5}, {1, 0}, 3), DomainError);
}

TEST_CASE("onto-wall translation matches the Euler character of the wall weight") {
    for (int l : kLevels)
        for_each_sweep_weight(l, 2, [&](Weight lam) {
            auto c = canonicalize(lam, l);
            auto facet = facet_of(c.rep, l);
            auto d = chi_decomposition(lam, l);
            for (int x = -1; x < l; ++x)
                for (int y = -1; y < l; ++y) {
                    Weight m{x, y};
                    if (m == c.rep || !in_closed_fundamental_alcove(m, l) || !facet.in_closure(m)) continue;
                    FormalChar sum;
                    for (Weight nu : d.factors)
                        if (auto r = translate_onto_wall(nu, c.rep, m, l); r.output) sum += chi_l(*r.output, l);
                    CHECK(sum == oracle::euler(apply_inverse(c.word, m)));
                }
        });
}

TEST_CASE("off-wall factor lists") {
    auto right = translate_off_wall({2, 2}, {4, 0}, {0, 0}, 5);
    CHECK(right.rule == "right-wall");
    CHECK(right.factors.size() == 6);
    CHECK(right.factors.front().restricted == Weight{3, 1});
    auto l2 = translate_off_wall({2, 2}, {1, 0}, {0, 0}, 2);
    CHECK(l2.rule == "l2-right-wall");
    CHECK(l2.factors.size() == 5);
    auto side = translate_off_wall({2, 2}, {1, 0}, {0, 1}, 2);
    CHECK(side.factors.size() == 1);
    CHECK(side.factors[0] == OffWallEntry{{2, 2}, {0, 0}});
    auto horiz = translate_off_wall({1, 1}, {3, 0}, {3, 1}, 5);
    CHECK(horiz.rule == "horizontal-wall");
    CHECK(horiz.factors.size() == 3);
    CHECK_THROWS_AS(translate_off_wall({1, 1}, {2, 2}, {0, 0}, 5), DomainError);
}

TEST_CASE("generic crossings: counts and characters") {
    int crossings = 0;
    for (int l : kLevels)
        for_each_sweep_weight(l, 3, [&](Weight lam) {
            auto mu = generic_wall_weight(lam, l);
            if (!mu) return;
            ++crossings;
            auto c = translate_nabla_off_wall(lam, *mu, l);
            CHECK(c.factor_count() == (l == 2 ? 8u : 18u));
            CHECK(translate_nabla_factor_count(lam, l) == int(c.factor_count()));
            CHECK(c.character() == weyl_char(lam) + euler_char(apply(c.wall, lam)));
            INFO("l " << l << " lambda " << to_string(lam) << " mu " << to_string(*mu));
            // Each list agrees with translating the Euler characters of its source.
            Weight mu_rep = oracle::alcove_rep(*mu, l), lam_rep = oracle::alcove_rep(lam, l);
            FormalChar total;
            for (std::size_t i = 0; i < c.lists.size(); ++i) {
                FormalChar expected = oracle::translate_euler(chi_l(c.source_factors[i], l), mu_rep, lam_rep, l);
                CHECK(c.lists[i].character(l) == expected);
                total += expected;
            }
            CHECK(total == oracle::translate_euler(oracle::gt_weyl_char(*mu), mu_rep, lam_rep, l));
        });
    CHECK(crossings > 0);
}

TEST_CASE("a generic weight at l = 5") {
    Weight lam{5 * 2 + 1, 5 * 2 + 1};
    auto mu = generic_wall_weight(lam, 5);
    REQUIRE(mu);
    CHECK(translate_nabla_factor_count(lam, 5) == 18);
    CHECK_THROWS_AS(translate_nabla_off_wall(lam, lam, 5), DomainError);
}
