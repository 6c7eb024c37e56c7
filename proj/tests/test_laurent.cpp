#include <doctest.h>

#include <random>

#include "weld/laurent.hpp"

using weld::LaurentPoly;

TEST_CASE("laurent arithmetic basics") {
    const LaurentPoly t = LaurentPoly::monomial(1, 1);
    const LaurentPoly p = t * t - t + LaurentPoly::constant(1);
    CHECK(p.str() == "t^2 - t + 1");
    CHECK(p.coeff(2) == 1);
    CHECK(p.coeff(1) == -1);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(5) == 0);
    CHECK((p - p).is_zero());
    CHECK((p * LaurentPoly::constant(0)).is_zero());
    CHECK(p.shifted(-2).min_exp() == -2);
}

TEST_CASE("laurent normalization and substitution") {
    const LaurentPoly p = LaurentPoly::from_terms({{-3, -2}, {-1, 3}, {0, -1}});
    const LaurentPoly n = p.normalized_units();
    CHECK(n.min_exp() == 0);
    CHECK(n.coeff(0) > 0);
    CHECK(n == LaurentPoly::from_terms({{0, 2}, {2, -3}, {3, 1}}));
    CHECK(n.substituted_inverse().normalized_units() ==
          LaurentPoly::from_terms({{0, 1}, {1, -3}, {3, 2}}));
    CHECK(LaurentPoly().normalized_units().is_zero());
}

TEST_CASE("exact division") {
    const LaurentPoly a = LaurentPoly::from_terms({{2, 1}, {1, -1}, {0, 1}});
    const LaurentPoly b = LaurentPoly::from_terms({{1, 2}, {-1, 3}});
    LaurentPoly q;
    REQUIRE(LaurentPoly::divide_exact(a * b, b, q));
    CHECK(q == a);
    REQUIRE(LaurentPoly::divide_exact(a * b, a, q));
    CHECK(q == b);
    CHECK_FALSE(LaurentPoly::divide_exact(a + LaurentPoly::constant(1), a, q));
    REQUIRE(LaurentPoly::divide_exact(LaurentPoly(), a, q));
    CHECK(q.is_zero());
}

TEST_CASE("determinant examples") {
    using M = std::vector<std::vector<LaurentPoly>>;
    CHECK(weld::det_laurent({}) == LaurentPoly::constant(1));
    const LaurentPoly t = LaurentPoly::monomial(1, 1);
    M m2{{t, LaurentPoly::constant(1)}, {LaurentPoly::constant(1), t}};
    CHECK(weld::det_laurent(m2) == t * t - LaurentPoly::constant(1));
    // singular
    M s{{t, t}, {t, t}};
    CHECK(weld::det_laurent(s).is_zero());
}

TEST_CASE("bareiss agrees with cofactor on random matrices") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-2, 2), expo(-1, 1);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 7;  // above the cofactor cutoff
        std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
        for (auto& row : m)
            for (auto& e : row)
                e = LaurentPoly::monomial(coeff(rng), expo(rng)) +
                    LaurentPoly::monomial(coeff(rng), 0);
        // independent cofactor expansion along the first row
        auto cof = [](auto&& self, const std::vector<std::vector<LaurentPoly>>& a) -> LaurentPoly {
            const size_t k = a.size();
            if (k == 0) return LaurentPoly::constant(1);
            LaurentPoly det;
            for (size_t j = 0; j < k; ++j) {
                std::vector<std::vector<LaurentPoly>> sub;
                for (size_t r = 1; r < k; ++r) {
                    std::vector<LaurentPoly> row;
                    for (size_t c = 0; c < k; ++c)
                        if (c != j) row.push_back(a[r][c]);
                    sub.push_back(std::move(row));
                }
                const LaurentPoly term = a[0][j] * self(self, sub);
                if (j % 2 == 0)
                    det += term;
                else
                    det -= term;
            }
            return det;
        };
        CHECK(weld::det_laurent(m) == cof(cof, m));
    }
}
