#include "qgl3/decomp.hpp"

#include <algorithm>

#include "oracles.hpp"
#include "support.hpp"

using namespace qgl3;
using qgl3::test::for_each_sweep_weight;
using qgl3::test::kLevels;

TEST_CASE("worked decomposition of (3,3) at l = 3") {
    auto d = chi_decomposition({3, 3}, 3);
    CHECK(d.case_id == "v");
    CHECK(d.facet == FacetType::DownAlcove);
    std::vector<Weight> expected = {{3, 3}, {4, 1}, {3, -3}, {1, 4}, {-3, 3}, {3, 0}, {0, 0}, {0, 3}, {1, 1}};
    CHECK(d.factors == expected);
    std::vector<std::int64_t> dims;
    for (Weight f : d.factors) dims.push_back(chi_l(f, 3).dimension());
    CHECK(dims == std::vector<std::int64_t>{8, 21, 0, 21, 0, 3, 1, 3, 7});
    CHECK(d.filtered().size() == 7);
    CHECK(decomposition_char(d) == weyl_char({3, 3}));
}

TEST_CASE("vertex and up-alcove cases") {
    for (int l : kLevels) {
        auto d = chi_decomposition({l - 1, l - 1}, l);
        CHECK(d.factors == std::vector<Weight>{{l - 1, l - 1}});
        CHECK(d.case_id == "i");
    }
    auto up = chi_decomposition({1, 1}, 3);
    CHECK(up.case_id == "vi");
    CHECK(up.factors.size() == 9);
}

TEST_CASE("decomposition identity against the pattern oracle") {
    for (int l : kLevels)
        for_each_sweep_weight(l, 2, [&](Weight lam) {
            auto d = chi_decomposition(lam, l);
            FormalChar sum;
            for (Weight f : d.factors) sum += chi_l(f, l);
            CHECK(sum == oracle::gt_weyl_char(lam));
            for (std::size_t i = 0; i < d.factors.size(); ++i) {
                CHECK(linked(d.factors[i], lam, l));
                CHECK(d.nonzero[i] == !chi_l(d.factors[i], l).empty());
            }
        });
}

TEST_CASE("removing any factor breaks the identity") {
    for (int l : kLevels)
        for_each_sweep_weight(l, 1, [&](Weight lam) {
            auto d = chi_decomposition(lam, l);
            for (std::size_t i = 0; i < d.factors.size(); ++i) {
                if (!d.nonzero[i]) continue;
                FormalChar sum;
                for (std::size_t j = 0; j < d.factors.size(); ++j)
                    if (j != i) sum += chi_l(d.factors[j], l);
                CHECK(sum != weyl_char(lam));
            }
        });
}

TEST_CASE("effective factors are genuine and account for the character") {
    for (int l : kLevels)
        for_each_sweep_weight(l, 3, [&](Weight lam) {
            auto d = chi_decomposition(lam, l);
            FormalChar sum;
            for (auto i : d.effective_indices()) {
                CHECK(is_dominant(decompose(d.factors[i], l).classical));
                sum += nabla_l_char(d.factors[i], l);
            }
            CHECK(sum == weyl_char(lam));
        });
}

TEST_CASE("zhat composition factors") {
    for (int l : kLevels) CHECK(zhat_factors({l - 1, l - 1}, l) == std::vector<Weight>{{l - 1, l - 1}});
    auto fs = zhat_factors({1, 0}, 2);
    REQUIRE(fs.size() == 4);
    std::int64_t total = 0;
    for (Weight f : fs) total += lhat_char(f, 2).dimension();
    CHECK(total == 8);
    for (int l : kLevels)
        for_each_sweep_weight(l, 2, [&](Weight lam) {
            auto z = zhat_factors(lam, l);
            FacetType f = restricted_facet(decompose(lam, l).restricted, l);
            std::size_t want = f == FacetType::Vertex ? 1 : (f == FacetType::DownAlcove || f == FacetType::UpAlcove) ? 9 : 4;
            CHECK(z.size() == want);
            CHECK(std::find(z.begin(), z.end(), lam) != z.end());
            FormalChar sum;
            for (Weight nu : z) sum += lhat_char(nu, l);
            CHECK(sum == zhat_char(lam, l));
            CHECK(sum.dimension() == std::int64_t(l) * l * l);
        });
}

TEST_CASE("zhat character of the trivial weight") {
    FormalChar z = zhat_char({0, 0}, 2);
    CHECK(z.dimension() == 8);
    CHECK(z.coeff({0, 0}) == 1);
    CHECK(z.coeff({-2, -2}) == 1);  // the lowest weight
    for (auto& [w, c] : z.terms()) CHECK(dominance_leq(w, {0, 0}));
}

TEST_CASE("nabla_l characters") {
    CHECK(nabla_l_char({4, 1}, 3).dimension() == 21);
    CHECK(nabla_l_char({2, 2}, 5) == restricted_simple_char({2, 2}, 5));
    CHECK_THROWS_AS(nabla_l_char({3, -3}, 3), DomainError);
}
