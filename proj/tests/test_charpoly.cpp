#include "fixtures.hpp"
#include "oracles.hpp"

#include <treespec/charpoly.hpp>

#include <gtest/gtest.h>

using namespace treespec;
using treespec::testing::double_star;
using treespec::testing::path;
using treespec::testing::star;

TEST(MatchingPolynomial, SingleEdge) {
    const auto p = matching_polynomial(path(2));
    EXPECT_EQ(p.coeffs, (std::vector<Rational>{1, 1}));
    EXPECT_EQ(format_in_y(p), "y^2 - 1");
    EXPECT_DOUBLE_EQ(eval_at(p, 0.0), 0.0);
    EXPECT_DOUBLE_EQ(eval_at(p, 2.0), 0.0);
}

TEST(MatchingPolynomial, DoubleStar) {
    const auto p = matching_polynomial(double_star());
    EXPECT_EQ(p.coeffs, (std::vector<Rational>{1, Rational(13, 9), Rational(4, 9)}));
    EXPECT_EQ(format_in_y(p), "y^6 - 13/9 y^4 + 4/9 y^2");
    EXPECT_EQ(multiplicity_of_one(p), 2u);
    EXPECT_NEAR(eval_at(p, 1.0 / 3.0), 0.0, 1e-12);
    EXPECT_EQ(p.coeffs, oracle::matching_coefficients(double_star()));
}

TEST(MatchingPolynomial, Stars) {
    for (int m = 1; m <= 7; ++m) {
        const auto p = matching_polynomial(star(m));
        EXPECT_EQ(p.coeffs, (std::vector<Rational>{1, 1}));
        EXPECT_EQ(multiplicity_of_one(p), static_cast<std::size_t>(m - 1));
    }
}

TEST(MatchingPolynomial, PathP4) {
    const auto p = matching_polynomial(path(4));
    EXPECT_EQ(multiplicity_of_one(p), 0u);
    EXPECT_NEAR(eval_at(p, 0.5), 0.0, 1e-12);
    EXPECT_NEAR(eval_at(p, 0.0), 0.0, 1e-12);
}

TEST(MatchingPolynomial, DpEqualsEnumerationExhaustive) {
    for (std::size_t n = 2; n <= 7; ++n)
        for_each_labeled_tree(n, [&](const Tree& t) {
            ASSERT_EQ(matching_polynomial(t).coeffs, oracle::matching_coefficients(t));
        });
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto t = random_tree(2 + seed % 13, seed + 17);
        ASSERT_EQ(matching_polynomial(t).coeffs, oracle::matching_coefficients(t));
    }
}

TEST(MatchingPolynomial, CoefficientsPositiveAndLeadOne) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto t = random_tree(2 + seed % 40, seed);
        const auto p = matching_polynomial(t);
        ASSERT_EQ(p.coeffs.front(), 1);
        for (const auto& c : p.coeffs) ASSERT_GT(sgn(c), 0);
        EXPECT_EQ(p.max_matching_size(), max_matching(t).size());
    }
}

TEST(MatchingPolynomial, ReproducesDeterminant) {
    // P(x) = det(xI - L): monic, so det(L - xI) = (-1)^n P(x).
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto t = random_tree(2 + seed % 12, seed);
        const auto p = matching_polynomial(t);
        for (double x : {-0.7, 0.1, 0.45, 1.3, 2.2}) {
            const double det = oracle::char_det(t, x);
            EXPECT_NEAR(eval_at(p, x), det, 1e-9 * std::max(1.0, std::abs(det)));
        }
    }
}

TEST(MatchingPolynomial, AlwaysVanishesAtZero) {
    for (std::uint64_t seed = 0; seed < 50; ++seed)
        EXPECT_NEAR(eval_at(matching_polynomial(random_tree(2 + seed, seed)), 0.0), 0.0, 1e-12);
}

TEST(RationalNullspace, SmallSystems) {
    // x + y + z = 0 has a 2-dimensional solution space.
    auto basis = rational_nullspace({{1, 1, 1}}, 3);
    ASSERT_EQ(basis.size(), 2u);
    for (const auto& v : basis) EXPECT_EQ(v[0] + v[1] + v[2], 0);
    // Full-rank square system: trivial kernel.
    EXPECT_TRUE(rational_nullspace({{1, 2}, {3, 4}}, 2).empty());
    // Dependent rows.
    EXPECT_EQ(rational_nullspace({{1, 2}, {2, 4}}, 2).size(), 1u);
}

TEST(OneEigenspace, Star) {
    const auto k = one_eigenspace_exact(star(4), {0});
    EXPECT_EQ(k.dimension, 3u);
    for (const auto& f : k.basis) {
        EXPECT_EQ(f[0], 0);
        EXPECT_EQ(f[1] + f[2] + f[3] + f[4], 0);
        EXPECT_EQ(apply_laplacian_exact(star(4), f), f);
    }
}

TEST(OneEigenspace, DoubleStar) {
    const auto t = double_star();
    const auto k = one_eigenspace_exact(t, {0, 1});
    ASSERT_EQ(k.dimension, 2u);
    // Each basis vector lives on one center's leaf pair with opposite values.
    for (const auto& f : k.basis) {
        EXPECT_EQ(f[0], 0);
        EXPECT_EQ(f[1], 0);
        const bool first_pair = sgn(f[2]) != 0;
        if (first_pair) {
            EXPECT_EQ(f[2], -f[3]);
            EXPECT_EQ(f[4], 0);
            EXPECT_EQ(f[5], 0);
        } else {
            EXPECT_EQ(f[4], -f[5]);
            EXPECT_NE(sgn(f[4]), 0);
        }
        EXPECT_EQ(apply_laplacian_exact(t, f), f);
    }
}

TEST(OneEigenspace, PathP4IsTrivial) { EXPECT_EQ(one_eigenspace_exact(path(4), {1, 2}).dimension, 0u); }

TEST(OneEigenspace, RejectsNonCover) { EXPECT_THROW(one_eigenspace_exact(path(4), {0}), std::invalid_argument); }

TEST(OneEigenspace, DimensionMatchesMultiplicityOnRandomTrees) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto t = random_tree(2 + seed % 40, seed);
        const auto c = min_vertex_cover(t);
        const auto k = one_eigenspace_exact(t, c.witness);
        EXPECT_EQ(k.dimension, multiplicity_of_one(matching_polynomial(t)));
        EXPECT_EQ(k.dimension, t.n() - 2 * static_cast<std::size_t>(c.size));
        for (const auto& f : k.basis) EXPECT_EQ(apply_laplacian_exact(t, f), f);
    }
}

TEST(Rational, StringForm) {
    EXPECT_EQ(to_string(Rational(13, 9)), "13/9");
    EXPECT_EQ(to_string(Rational(4, 2)), "2");
    EXPECT_EQ(parse_rational("26/18"), Rational(13, 9));
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}
