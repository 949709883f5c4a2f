#include "fixtures.hpp"

#include <treespec/tree.hpp>

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <sstream>

using namespace treespec;
using treespec::testing::double_star;
using treespec::testing::path;
using treespec::testing::star;

namespace {

TreeErrorKind error_of(const std::vector<Edge>& edges) {
    try {
        (void)from_edge_list(edges);
    } catch (const TreeError& e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected a TreeError";
    return TreeErrorKind::empty_input;
}

} // namespace

TEST(FromEdgeList, SmallestTree) {
    const auto t = from_edge_list({{0, 1}});
    EXPECT_EQ(t.n(), 2u);
    EXPECT_EQ(t.neighbors(0), std::vector<Vertex>{1});
    EXPECT_EQ(t.neighbors(1), std::vector<Vertex>{0});
}

TEST(FromEdgeList, PathP4) {
    const auto t = from_edge_list({{0, 1}, {1, 2}, {2, 3}});
    EXPECT_EQ(t.n(), 4u);
    EXPECT_EQ(t.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
    EXPECT_EQ(t.neighbors(1), (std::vector<Vertex>{0, 2}));
}

TEST(FromEdgeList, RejectsEachInvariantDistinctly) {
    EXPECT_EQ(error_of({{0, 1}, {1, 2}, {2, 0}}), TreeErrorKind::cycle);
    EXPECT_EQ(error_of({}), TreeErrorKind::empty_input);
    EXPECT_EQ(error_of({{0, 0}}), TreeErrorKind::self_loop);
    EXPECT_EQ(error_of({{0, 1}, {1, 0}}), TreeErrorKind::duplicate_edge);
    EXPECT_EQ(error_of({{0, 1}, {2, 3}}), TreeErrorKind::disconnected);
    EXPECT_EQ(error_of({{0, 2}}), TreeErrorKind::isolated_vertex);
    EXPECT_EQ(error_of({{-1, 2}}), TreeErrorKind::negative_id);
}

TEST(FromEdgeList, CycleMessageNamesInvariant) {
    try {
        (void)from_edge_list({{0, 1}, {1, 2}, {2, 0}});
        FAIL();
    } catch (const TreeError& e) {
        EXPECT_NE(std::string(e.what()).find("cycle detected"), std::string::npos);
    }
}

TEST(Pruefer, Decoding) {
    EXPECT_EQ(from_pruefer({}).edges(), (std::vector<Edge>{{0, 1}}));
    EXPECT_EQ(from_pruefer({1, 1}), from_edge_list({{0, 1}, {1, 2}, {1, 3}}));
    EXPECT_EQ(from_pruefer({0, 1, 2}).edges(), (std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 4}}));
    EXPECT_THROW(from_pruefer({5}), TreeError);
}

TEST(Pruefer, RoundTripOnRandomTrees) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto t = random_tree(2 + seed % 40, seed);
        EXPECT_EQ(from_pruefer(to_pruefer(t)), t);
    }
}

TEST(Pruefer, EnumerationCountsCayley) {
    for (std::size_t n = 2; n <= 6; ++n) {
        std::set<std::vector<Edge>> seen;
        std::size_t count = 0;
        for_each_labeled_tree(n, [&](const Tree& t) {
            ++count;
            seen.insert(t.edges());
        });
        std::size_t cayley = 1;
        for (std::size_t i = 0; i + 2 < n; ++i) cayley *= n;
        EXPECT_EQ(count, cayley);
        EXPECT_EQ(seen.size(), cayley);
    }
}

TEST(RandomTree, DeterministicAndValid) {
    EXPECT_EQ(random_tree(2, 12345).edges(), (std::vector<Edge>{{0, 1}}));
    EXPECT_EQ(random_tree(5, 77), random_tree(5, 77));
    EXPECT_THROW(random_tree(1, 0), TreeError);
    for (std::size_t n = 2; n <= 64; ++n)
        for (std::uint64_t seed = 0; seed < 1000; seed += 1) {
            const auto t = random_tree(n, seed * 2654435761ULL + n);
            ASSERT_EQ(t.n(), n);
        }
}

TEST(RandomTree, UniformOverThreeVertexTrees) {
    // 3 labeled trees on 3 vertices, identified by their center.
    std::map<Vertex, int> hist;
    const int draws = 30000;
    for (int s = 0; s < draws; ++s) {
        const auto t = random_tree(3, static_cast<std::uint64_t>(s));
        for (Vertex v = 0; v < 3; ++v)
            if (t.degree(v) == 2) ++hist[v];
    }
    ASSERT_EQ(hist.size(), 3u);
    double chi2 = 0.0;
    for (const auto& [v, k] : hist) chi2 += (k - draws / 3.0) * (k - draws / 3.0) / (draws / 3.0);
    EXPECT_LT(chi2, 13.8);  // chi-square, 2 dof, p = 0.001
}

TEST(RandomTree, FixedStreamIsPinned) {
    // mt19937_64 is bit-exact: the 10000th output for seed 5489 is fixed.
    SeededRng rng(5489);
    std::uint64_t x = 0;
    for (int i = 0; i < 10000; ++i) x = rng.next();
    EXPECT_EQ(x, 9981545732273789042ULL);
}

TEST(DeleteVertices, PathMinusInnerVertex) {
    const auto f = delete_vertices(path(4), {1});
    ASSERT_EQ(f.components.size(), 2u);
    EXPECT_EQ(f.components[0].labels, std::vector<Vertex>{0});
    EXPECT_TRUE(f.components[0].isolated());
    EXPECT_EQ(f.components[1].labels, (std::vector<Vertex>{2, 3}));
    EXPECT_EQ(f.components[1].adjacency, (Adjacency{{1}, {0}}));
}

TEST(DeleteVertices, IdentityAndStarCenter) {
    const auto same = delete_vertices(path(4), {});
    ASSERT_EQ(same.components.size(), 1u);
    EXPECT_EQ(same.components[0].as_tree(), path(4));

    const auto f = delete_vertices(star(5), {0});
    EXPECT_EQ(f.components.size(), 5u);
    for (const auto& c : f.components) EXPECT_TRUE(c.isolated());

    EXPECT_THROW(delete_vertices(path(2), {0, 1}), std::invalid_argument);
}

TEST(DeleteVertices, PartitionsRemainingVertices) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto t = random_tree(3 + seed % 20, seed);
        std::vector<Vertex> z;
        for (Vertex v = 0; v < static_cast<Vertex>(t.n()); v += 3) z.push_back(v);
        const VertexSet zs(z);
        const auto f = delete_vertices(t, zs);
        std::vector<Vertex> all;
        for (const auto& c : f.components) {
            all.insert(all.end(), c.labels.begin(), c.labels.end());
            for (std::size_t i = 0; i < c.size(); ++i)
                for (Vertex j : c.adjacency[i]) EXPECT_TRUE(t.adjacent(c.labels[i], c.labels[static_cast<std::size_t>(j)]));
        }
        EXPECT_EQ(VertexSet(all), zs.complement(t.n()));
        EXPECT_EQ(all.size(), t.n() - zs.size());
    }
}

TEST(ExpandSubgraph, Examples) {
    const auto whole = expand_subgraph(star(4), {0});
    ASSERT_EQ(whole.components.size(), 1u);
    EXPECT_EQ(whole.components[0].as_tree(), star(4));

    const auto p = expand_subgraph(path(4), {1});
    ASSERT_EQ(p.components.size(), 1u);
    EXPECT_EQ(p.components[0].labels, (std::vector<Vertex>{0, 1, 2}));
    EXPECT_EQ(p.components[0].as_tree(), path(3));

    const auto ds = expand_subgraph(double_star(), {0});
    ASSERT_EQ(ds.components.size(), 1u);
    EXPECT_EQ(ds.components[0].labels, (std::vector<Vertex>{0, 1, 2, 3}));
    EXPECT_EQ(ds.components[0].as_tree(), star(3));

    // Leaves 2 and 4 of different centers: two separate edges; edge 0-1 is not incident.
    const auto two = expand_subgraph(double_star(), {2, 4});
    EXPECT_EQ(two.components.size(), 2u);

    EXPECT_THROW(expand_subgraph(path(3), {}), std::invalid_argument);
}

TEST(Measure, DegreeSums) {
    const auto p4 = path(4);
    EXPECT_EQ(leaves(p4), (VertexSet{0, 3}));
    EXPECT_EQ(measure(p4, {1, 2}), 4);
    EXPECT_EQ(measure(p4, {0, 3}), 2);
    EXPECT_THROW(degree(p4, 4), TreeError);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto t = random_tree(2 + seed, seed);
        EXPECT_EQ(measure(t, VertexSet{}.complement(t.n())), 2 * static_cast<long>(t.n() - 1));
        EXPECT_FALSE(leaves(t).empty());
    }
}

TEST(EdgeListFormat, ParsesCommentsAndBlankLines) {
    std::istringstream in("# double star\n0 1\n\n0 2   # leaf\n  0 3\n1 4\n1 5\n");
    const auto t = from_edge_list(parse_edge_list(in));
    EXPECT_EQ(t, double_star());
}

TEST(EdgeListFormat, ReportsLineNumbers) {
    std::istringstream bad("0 1\n1 x\n");
    try {
        (void)parse_edge_list(bad);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
    std::istringstream extra("0 1 2\n");
    EXPECT_THROW(parse_edge_list(extra), ParseError);
    std::istringstream word("zero one\n");
    EXPECT_THROW(parse_edge_list(word), ParseError);
}

TEST(EnsemblePlan, RangeAndDeterminism) {
    const auto a = ensemble_plan(200, 4, 24, 99);
    const auto b = ensemble_plan(200, 4, 24, 99);
    ASSERT_EQ(a.size(), 200u);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].n, b[i].n);
        EXPECT_EQ(a[i].seed, b[i].seed);
        EXPECT_GE(a[i].n, 4u);
        EXPECT_LE(a[i].n, 24u);
    }
    EXPECT_THROW(ensemble_plan(1, 5, 4, 0), std::invalid_argument);
    EXPECT_TRUE(ensemble_plan(0, 2, 2, 0).empty());
}
