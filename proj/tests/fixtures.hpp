#pragma once

#include <treespec/tree.hpp>

#include <vector>

namespace treespec::testing {

inline Tree path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Tree::from_edges(e);
}

/// K_{1,m} with center 0.
inline Tree star(int m) {
    std::vector<Edge> e;
    for (int i = 1; i <= m; ++i) e.emplace_back(0, i);
    return Tree::from_edges(e);
}

/// Centers 0 and 1; leaves 2..a+1 on 0, then b leaves on 1.
inline Tree double_star(int a = 2, int b = 2) {
    std::vector<Edge> e{{0, 1}};
    int next = 2;
    for (int i = 0; i < a; ++i) e.emplace_back(0, next++);
    for (int i = 0; i < b; ++i) e.emplace_back(1, next++);
    return Tree::from_edges(e);
}

/// Two copies of S(2,2) whose first centers both attach to middle vertex 0.
inline Tree twin_double_stars() {
    std::vector<Edge> e;
    for (int copy = 0; copy < 2; ++copy) {
        const int base = 1 + 6 * copy;
        e.emplace_back(base, base + 1);
        e.emplace_back(base, base + 2);
        e.emplace_back(base, base + 3);
        e.emplace_back(base + 1, base + 4);
        e.emplace_back(base + 1, base + 5);
        e.emplace_back(0, base);
    }
    return Tree::from_edges(e);
}

/// Hub 1 of degree 5; 0 and 2 each carry one more leaf. Its cover {0,1,2}
/// has A = 8/15 < lambda_bar = 0.5477.
inline Tree quotient_bound_counterexample() {
    return Tree::from_edges({{0, 1}, {0, 4}, {1, 2}, {1, 3}, {1, 5}, {1, 6}, {2, 7}});
}

/// Hub 7 joined to 2 (two leaves), 3 and 4 (one leaf each). The only
/// minimum cover is {2,3,4}, yet every lambda_p-eigenvector vanishes at 2.
inline Tree vanishing_cover_counterexample() {
    return Tree::from_edges({{0, 2}, {1, 2}, {2, 7}, {3, 5}, {3, 7}, {4, 6}, {4, 7}});
}

} // namespace treespec::testing
