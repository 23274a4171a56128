#include "qgl3/homs.hpp"

#include <algorithm>

#include "qgl3/decomp.hpp"
#include "support.hpp"

using namespace qgl3;
using qgl3::test::for_each_sweep_weight;
using qgl3::test::kLevels;

TEST_CASE("mirror witness for (3,3) and (1,1)") {
    auto w = hom_exists_mirror({3, 3}, {1, 1}, 3, 0);
    REQUIRE(w);
    CHECK(*w == HomWitness{Root::Rho, 2, 0});
    CHECK(witness_valid({3, 3}, {1, 1}, *w, 3, 0));
    CHECK_FALSE(hom_exists_mirror({3, 3}, {3, 3}, 3, 0));
    CHECK_FALSE(hom_exists_mirror({1, 1}, {3, 3}, 3, 0));
}

TEST_CASE("extra walls between the pair rule out a witness") {
    // Mirror images in the rho wall at 6, but the walls at 3 and 9 also lie between them.
    Weight lam{4, 4}, mu{0, 0};
    CHECK(affine_reflect(lam, Root::Rho, 2, 3) == mu);
    CHECK_FALSE(witness_valid(lam, mu, HomWitness{Root::Rho, 2, 0}, 3, 0));
    CHECK_FALSE(hom_exists_mirror(lam, mu, 3, 0));
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(hom_exists_mirror({-1, 0}, {0, 0}, 3, 0), DomainError);
    CHECK_THROWS_AS(hom_exists_mirror({3, 3}, {1, 1}, 3, 4), DomainError);
    CHECK(is_prime(2));
    CHECK(is_prime(7));
    CHECK_FALSE(is_prime(9));
}

TEST_CASE("head weights") {
    CHECK(zhat_head_weight({3, 3}, 3) == Weight{1, 1});
    for (int l : kLevels) CHECK(zhat_head_weight({l - 1, l - 1}, l) == Weight{l - 1, l - 1});
    CHECK(zhat_head_weight({1, 0}, 2) == Weight{0, -1});
    CHECK(nabla_g1_head_weight({3, 3}, 3) == Weight{1, 1});
    CHECK_THROWS_AS(nabla_g1_head_weight({4, 1}, 3), DomainError);
    // On the rho wall with r + s = l - 2 the head is lam - l rho.
    CHECK(nabla_g1_head_weight({5 * 2 + 1, 5 * 2 + 2}, 5) == Weight{6, 7});
    // For a lower-alcove interior weight the formula reads (l-s-2, l-r-2) + l(a-1, b-1).
    for (int l : {3, 5})
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b)
                for (int r = 0; r < l; ++r)
                    for (int s = 0; r + s <= l - 3; ++s)
                        CHECK(zhat_head_weight({l * a + r, l * b + s}, l) ==
                              Weight{l - s - 2 + l * (a - 1), l - r - 2 + l * (b - 1)});
}

TEST_CASE("witness properties over the sweep") {
    for (int l : kLevels)
        for_each_sweep_weight(l, 2, [&](Weight lam) {
            int box = std::max(lam.a, lam.b);
            for (int p : {0, 2, 3}) {
                auto targets = enumerate_hom_targets(lam, l, p, box);
                CHECK(std::is_sorted(targets.begin(), targets.end(),
                                     [](auto& x, auto& y) { return x.first < y.first; }));
                for (auto& [mu, w] : targets) {
                    CHECK(mu != lam);
                    CHECK(dominance_leq(mu, lam));
                    CHECK(witness_valid(lam, mu, w, l, p));
                    CHECK_FALSE(hom_exists_mirror(mu, lam, l, p));
                    CHECK(affine_reflect(lam, w.beta, w.m, wall_step(l, p, w.e)) == mu);
                    if (p == 0) CHECK(w.e == 0);
                }
            }
        });
}

TEST_CASE("the head of Z^ is reached by a rho-witness") {
    for (int l : kLevels)
        for_each_sweep_weight(l, 3, [&](Weight lam) {
            auto [cl, rs] = decompose(lam, l);
            if (restricted_facet(rs, l) != FacetType::DownAlcove || cl.a < 1 || cl.b < 1) return;
            Weight head = zhat_head_weight(lam, l);
            auto w = hom_exists_mirror(lam, head, l, 0);
            REQUIRE(w);
            CHECK(w->beta == Root::Rho);
            CHECK(w->e == 0);
            auto targets = enumerate_hom_targets(lam, l, 0, std::max(lam.a, lam.b));
            CHECK(std::any_of(targets.begin(), targets.end(), [&](auto& t) { return t.first == head; }));
        });
}

TEST_CASE("higher walls appear only in positive characteristic") {
    // rho pairings 11 and 5 mirror in the wall at 8 = 2lp; the l-walls at 6 and 10 rule out e = 0.
    auto w = hom_exists_mirror({4, 5}, {1, 2}, 2, 2);
    REQUIRE(w);
    CHECK(*w == HomWitness{Root::Rho, 2, 1});
    CHECK_FALSE(hom_exists_mirror({4, 5}, {1, 2}, 2, 0));
    for (auto& [mu, t] : enumerate_hom_targets({7, 0}, 2, 0, 8)) CHECK(t.e == 0);
}
