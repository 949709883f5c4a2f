#include "fixtures.hpp"
#include "oracles.hpp"

#include <treespec/cover.hpp>

#include <gtest/gtest.h>

#include <algorithm>

using namespace treespec;
using treespec::testing::double_star;
using treespec::testing::path;
using treespec::testing::star;

namespace {

std::vector<VertexSet> sorted(std::vector<VertexSet> v) {
    std::sort(v.begin(), v.end());
    return v;
}

bool complement_independent(const Tree& t, const VertexSet& cover) {
    const auto rest = cover.complement(t.n());
    for (const auto& [u, v] : t.edges())
        if (rest.contains(u) && rest.contains(v)) return false;
    return true;
}

} // namespace

TEST(MaxMatching, Examples) {
    EXPECT_EQ(max_matching(path(2)), (std::vector<Edge>{{0, 1}}));
    EXPECT_EQ(max_matching(path(4)), (std::vector<Edge>{{0, 1}, {2, 3}}));
    EXPECT_EQ(max_matching(star(5)).size(), 1u);
}

TEST(MinVertexCover, Examples) {
    const auto s = min_vertex_cover(star(4));
    EXPECT_EQ(s.size, 1);
    EXPECT_EQ(s.witness, (VertexSet{0}));

    const auto p = min_vertex_cover(path(4));
    EXPECT_EQ(p.size, 2);
    EXPECT_EQ(p.witness, (VertexSet{1, 2}));

    const auto d = min_vertex_cover(double_star());
    EXPECT_EQ(d.size, 2);
    EXPECT_EQ(d.witness, (VertexSet{0, 1}));
    EXPECT_EQ(oracle::min_cover_size(double_star()), 2);
}

TEST(MinCoverWithForced, Examples) {
    EXPECT_EQ(min_cover_with_forced(path(4), {0}, {}), 2);
    EXPECT_EQ(min_cover_with_forced(star(4), {}, {0}), 4);
    EXPECT_EQ(min_cover_with_forced(path(4), {}, {1, 2}), std::nullopt);
    EXPECT_THROW((void)min_cover_with_forced(path(4), {1}, {1}), std::invalid_argument);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto t = random_tree(2 + seed % 30, seed);
        EXPECT_EQ(min_cover_with_forced(t, {}, {}), min_vertex_cover(t).size);
    }
}

TEST(MinCoverWithForced, MatchesBruteForceUnderPins) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto t = random_tree(3 + seed % 9, seed);
        const Vertex a = static_cast<Vertex>(seed % t.n());
        const Vertex b = static_cast<Vertex>((seed / 3 + 1) % t.n());
        if (a == b) continue;
        int best = 1000;
        for (std::uint32_t mask = 0; mask < (1U << t.n()); ++mask)
            if ((mask >> a) & 1U && !((mask >> b) & 1U) && oracle::mask_covers(t, mask))
                best = std::min(best, std::popcount(mask));
        const auto got = min_cover_with_forced(t, {a}, {b});
        if (best == 1000)
            EXPECT_FALSE(got.has_value());
        else
            EXPECT_EQ(got, best);
    }
}

TEST(CoverMembership, Examples) {
    const auto s = cover_membership(star(3));
    EXPECT_EQ(s.cover_union, (VertexSet{0}));
    EXPECT_EQ(s.always_excluded, (VertexSet{1, 2, 3}));

    const auto p = cover_membership(path(4));
    EXPECT_EQ(p.cover_union, (VertexSet{0, 1, 2, 3}));
    EXPECT_TRUE(p.always_excluded.empty());

    const auto d = cover_membership(double_star());
    EXPECT_EQ(d.cover_union, (VertexSet{0, 1}));
    EXPECT_EQ(d.always_excluded, (VertexSet{2, 3, 4, 5}));
}

TEST(CoverMembership, UnionOfBruteForceCovers) {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const auto t = random_tree(2 + seed % 13, seed);
        VertexSet u;
        for (const auto& c : oracle::all_min_covers(t)) u = u.unite(c);
        EXPECT_EQ(cover_membership(t).cover_union, u);
    }
}

TEST(EnumerateMinCovers, Examples) {
    EXPECT_EQ(sorted(enumerate_min_covers(path(2), 10).covers), (std::vector<VertexSet>{{0}, {1}}));
    EXPECT_EQ(enumerate_min_covers(star(3), 10).covers, (std::vector<VertexSet>{{0}}));
    EXPECT_EQ(sorted(enumerate_min_covers(path(4), 10).covers), sorted({{1, 2}, {0, 2}, {1, 3}}));

    const auto capped = enumerate_min_covers(path(4), 2);
    EXPECT_EQ(capped.covers.size(), 2u);
    EXPECT_TRUE(capped.truncated);
    EXPECT_FALSE(enumerate_min_covers(path(4), 3).truncated);
}

TEST(EnumerateMinCovers, MatchesSubsetEnumeration) {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const auto t = random_tree(2 + seed % 15, seed * 31 + 7);
        const auto got = enumerate_min_covers(t, 100000);
        EXPECT_FALSE(got.truncated);
        EXPECT_EQ(sorted(got.covers), sorted(oracle::all_min_covers(t)));
    }
}

TEST(CoverInvariants, KoenigIndependenceAndHalfBound) {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const auto t = random_tree(2 + seed % 63, seed);
        const auto c = min_vertex_cover(t);
        const auto m = max_matching(t);
        ASSERT_EQ(static_cast<int>(m.size()), c.size) << "seed " << seed;
        ASSERT_TRUE(is_vertex_cover(t, c.witness));
        ASSERT_TRUE(complement_independent(t, c.witness));
        ASSERT_LE(2 * c.size, static_cast<int>(t.n()));
        std::vector<int> used(t.n(), 0);
        for (const auto& [u, v] : m) {
            ASSERT_TRUE(t.adjacent(u, v));
            ASSERT_LE(++used[static_cast<std::size_t>(u)], 1);
            ASSERT_LE(++used[static_cast<std::size_t>(v)], 1);
        }
    }
}

TEST(CoverInvariants, DpMatchesSubsetOracle) {
    for (std::size_t n = 2; n <= 7; ++n)
        for_each_labeled_tree(n, [&](const Tree& t) { ASSERT_EQ(min_vertex_cover(t).size, oracle::min_cover_size(t)); });
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto t = random_tree(9 + seed % 8, seed + 1000);
        ASSERT_EQ(min_vertex_cover(t).size, oracle::min_cover_size(t));
    }
}

TEST(CoverInvariants, ExcludedVertexDeletionKeepsSize) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto t = random_tree(3 + seed % 20, seed);
        const auto rep = cover_report(t);
        for (Vertex z : rep.always_excluded)
            EXPECT_EQ(min_cover_size(delete_vertices(t, {z})), rep.cover_size);
    }
}

TEST(CoverReport, FieldInvariants) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto t = random_tree(2 + seed % 30, seed);
        const auto r = cover_report(t);
        EXPECT_EQ(r.cover_size, r.matching_size);
        EXPECT_TRUE(r.witness_cover.is_subset_of(r.cover_union));
        EXPECT_TRUE(r.cover_union.intersect(r.always_excluded).empty());
        EXPECT_EQ(r.cover_union.unite(r.always_excluded), VertexSet{}.complement(t.n()));
    }
}

TEST(CoverProperties, StarAndPath) {
    EXPECT_TRUE(check_cover_properties(star(4)).passed());
    const auto p = check_cover_properties(path(4));
    EXPECT_TRUE(p.passed());
    EXPECT_EQ(p.covers_checked, 3u);
    // C = {1,2}, C' = {1}: t - {1} = {0} + {2,3}, mvc 1 = |C| - 1.
    EXPECT_EQ(min_cover_size(delete_vertices(path(4), {1})), 1);
}

TEST(CoverProperties, RandomTreesHold) {
    EXPECT_TRUE(check_cover_properties(random_tree(12, 2024)).passed());
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto rep = check_cover_properties(random_tree(2 + seed % 20, seed));
        EXPECT_TRUE(rep.passed()) << (rep.violations.empty() ? "" : rep.violations[0].detail);
        EXPECT_GT(rep.subsets_checked, 0u);
    }
}
