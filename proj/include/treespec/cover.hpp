#pragma once

// Maximum matchings and minimum vertex covers on trees and forests by
// rooted dynamic programming, plus the structural cover properties.

#include <treespec/tree.hpp>

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace treespec {

namespace detail {

/// BFS orders of every component of an acyclic adjacency, roots at the
/// smallest unvisited id; parent[root] == -1.
struct RootedForest {
    std::vector<Vertex> order;
    std::vector<Vertex> parent;
    std::vector<Vertex> roots;

    explicit RootedForest(const Adjacency& adj) : parent(adj.size(), -1) {
        std::vector<bool> seen(adj.size(), false);
        order.reserve(adj.size());
        for (std::size_t r = 0; r < adj.size(); ++r) {
            if (seen[r]) continue;
            seen[r] = true;
            roots.push_back(static_cast<Vertex>(r));
            std::size_t head = order.size();
            order.push_back(static_cast<Vertex>(r));
            for (; head < order.size(); ++head) {
                const Vertex u = order[head];
                for (Vertex v : adj[static_cast<std::size_t>(u)]) {
                    if (seen[static_cast<std::size_t>(v)]) continue;
                    seen[static_cast<std::size_t>(v)] = true;
                    parent[static_cast<std::size_t>(v)] = u;
                    order.push_back(v);
                }
            }
        }
    }
};

constexpr int kInfeasible = std::numeric_limits<int>::max() / 4;

struct CoverTable {
    std::vector<int> in;   // best size of subtree cover with v in the cover
    std::vector<int> out;  // best size with v outside the cover
};

inline CoverTable cover_table(const Adjacency& adj, const RootedForest& rooted, const std::vector<bool>* forced_in,
                              const std::vector<bool>* forced_out) {
    const std::size_t n = adj.size();
    CoverTable tab{std::vector<int>(n, 1), std::vector<int>(n, 0)};
    for (auto it = rooted.order.rbegin(); it != rooted.order.rend(); ++it) {
        const auto v = static_cast<std::size_t>(*it);
        if (forced_out && (*forced_out)[v]) tab.in[v] = kInfeasible;
        if (forced_in && (*forced_in)[v]) tab.out[v] = kInfeasible;
        const Vertex p = rooted.parent[v];
        if (p < 0) continue;
        const auto pi = static_cast<std::size_t>(p);
        tab.in[pi] = std::min(kInfeasible, tab.in[pi] + std::min(tab.in[v], tab.out[v]));
        tab.out[pi] = std::min(kInfeasible, tab.out[pi] + tab.in[v]);
    }
    return tab;
}

inline std::optional<int> forced_cover_size(const Adjacency& adj, const std::vector<bool>* forced_in,
                                            const std::vector<bool>* forced_out) {
    const RootedForest rooted(adj);
    const auto tab = cover_table(adj, rooted, forced_in, forced_out);
    int total = 0;
    for (Vertex r : rooted.roots) {
        const int best = std::min(tab.in[static_cast<std::size_t>(r)], tab.out[static_cast<std::size_t>(r)]);
        if (best >= kInfeasible) return std::nullopt;
        total += best;
    }
    return total;
}

inline int cover_size(const Adjacency& adj) { return *forced_cover_size(adj, nullptr, nullptr); }

// Witness: roots prefer "out" on ties, children of an included parent
// prefer "in" on ties; children visited in ascending id.
inline std::vector<bool> cover_witness(const Adjacency& adj) {
    const RootedForest rooted(adj);
    const auto tab = cover_table(adj, rooted, nullptr, nullptr);
    std::vector<bool> chosen(adj.size(), false);
    for (Vertex v : rooted.order) {
        const auto vi = static_cast<std::size_t>(v);
        const Vertex p = rooted.parent[vi];
        if (p < 0)
            chosen[vi] = tab.in[vi] < tab.out[vi];
        else if (!chosen[static_cast<std::size_t>(p)])
            chosen[vi] = true;
        else
            chosen[vi] = tab.in[vi] <= tab.out[vi];
    }
    return chosen;
}

inline bool covers_all_edges(const Adjacency& adj, const std::vector<bool>& in_cover) {
    for (std::size_t u = 0; u < adj.size(); ++u)
        for (Vertex v : adj[u])
            if (!in_cover[u] && !in_cover[static_cast<std::size_t>(v)]) return false;
    return true;
}

} // namespace detail

/// Maximum matching by leaf-to-root greedy: match a vertex to its parent
/// whenever both are free. Exact on trees.
inline std::vector<Edge> max_matching(const Tree& t) {
    const detail::RootedForest rooted(t.adjacency());
    std::vector<bool> matched(t.n(), false);
    std::vector<Edge> m;
    for (auto it = rooted.order.rbegin(); it != rooted.order.rend(); ++it) {
        const Vertex v = *it;
        const Vertex p = rooted.parent[static_cast<std::size_t>(v)];
        if (p < 0 || matched[static_cast<std::size_t>(v)] || matched[static_cast<std::size_t>(p)]) continue;
        matched[static_cast<std::size_t>(v)] = matched[static_cast<std::size_t>(p)] = true;
        m.emplace_back(std::min(v, p), std::max(v, p));
    }
    std::sort(m.begin(), m.end());
    return m;
}

struct MinCover {
    int size = 0;
    VertexSet witness;
};

inline MinCover min_vertex_cover(const Tree& t) {
    auto chosen = detail::cover_witness(t.adjacency());
    MinCover c;
    c.witness = VertexSet::from_mask(chosen);
    c.size = static_cast<int>(c.witness.size());
    return c;
}

/// Minimum cover size for any forest component (isolated vertices need none).
inline int min_cover_size(const Component& c) { return detail::cover_size(c.adjacency); }

inline int min_cover_size(const Forest& f) {
    int total = 0;
    for (const auto& c : f.components) total += min_cover_size(c);
    return total;
}

inline bool is_vertex_cover(const Tree& t, const VertexSet& s) {
    return detail::covers_all_edges(t.adjacency(), s.mask(t.n()));
}

/// Minimum cover size with vertices pinned in or out; nullopt when
/// forced_out contains both endpoints of an edge.
inline std::optional<int> min_cover_with_forced(const Tree& t, const VertexSet& forced_in,
                                                const VertexSet& forced_out) {
    for (Vertex v : forced_in) t.check_vertex(v);
    for (Vertex v : forced_out) t.check_vertex(v);
    if (!forced_in.intersect(forced_out).empty())
        throw std::invalid_argument("forced_in and forced_out overlap");
    const auto in_mask = forced_in.mask(t.n());
    const auto out_mask = forced_out.mask(t.n());
    return detail::forced_cover_size(t.adjacency(), &in_mask, &out_mask);
}

struct CoverMembership {
    VertexSet cover_union;      ///< in at least one minimum cover
    VertexSet always_excluded;  ///< in no minimum cover
};

inline CoverMembership cover_membership(const Tree& t) {
    const int k = detail::cover_size(t.adjacency());
    std::vector<bool> in_some(t.n(), false);
    std::vector<bool> pin(t.n(), false);
    for (std::size_t v = 0; v < t.n(); ++v) {
        pin[v] = true;
        const auto size = detail::forced_cover_size(t.adjacency(), &pin, nullptr);
        in_some[v] = size && *size == k;
        pin[v] = false;
    }
    CoverMembership m;
    m.cover_union = VertexSet::from_mask(in_some);
    in_some.flip();
    m.always_excluded = VertexSet::from_mask(in_some);
    return m;
}

struct CoverEnumeration {
    std::vector<VertexSet> covers;
    bool truncated = false;
};

/// All minimum vertex covers, by backtracking over vertices in id order
/// and pruning every partial assignment whose forced optimum exceeds the
/// minimum. Stops after `cap` covers.
inline CoverEnumeration enumerate_min_covers(const Tree& t, std::size_t cap) {
    const auto& adj = t.adjacency();
    const int k = detail::cover_size(adj);
    const std::size_t n = t.n();
    std::vector<bool> in(n, false), out(n, false);
    CoverEnumeration result;

    auto feasible = [&] {
        const auto s = detail::forced_cover_size(adj, &in, &out);
        return s && *s == k;
    };
    // Iterative DFS: state per depth is 0 = try out, 1 = try in, 2 = done.
    std::vector<int> state(n + 1, 0);
    std::size_t depth = 0;
    while (true) {
        if (depth == n) {
            if (result.covers.size() >= cap) {
                result.truncated = true;
                return result;
            }
            result.covers.push_back(VertexSet::from_mask(in));
            --depth;
            continue;
        }
        int& s = state[depth];
        in[depth] = out[depth] = false;
        if (s == 2) {
            s = 0;
            if (depth == 0) break;
            --depth;
            continue;
        }
        if (s == 0)
            out[depth] = true;
        else
            in[depth] = true;
        ++s;
        if (feasible()) ++depth;
    }
    return result;
}

struct CoverReport {
    int cover_size = 0;
    VertexSet witness_cover;
    int matching_size = 0;
    std::vector<Edge> witness_matching;
    VertexSet cover_union;
    VertexSet always_excluded;
};

inline CoverReport cover_report(const Tree& t) {
    CoverReport r;
    auto mvc = min_vertex_cover(t);
    r.cover_size = mvc.size;
    r.witness_cover = std::move(mvc.witness);
    r.witness_matching = max_matching(t);
    r.matching_size = static_cast<int>(r.witness_matching.size());
    auto membership = cover_membership(t);
    r.cover_union = std::move(membership.cover_union);
    r.always_excluded = std::move(membership.always_excluded);
    return r;
}

// ---------------------------------------------------------------------------
// Structural properties of minimum covers

struct PropertyViolation {
    std::string property;
    std::string detail;
};

struct CoverPropertyReport {
    std::size_t covers_checked = 0;
    std::size_t subsets_checked = 0;
    bool covers_truncated = false;
    std::vector<PropertyViolation> violations;

    bool passed() const noexcept { return violations.empty(); }
};

namespace detail {

inline std::string set_str(const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

// Subsets of c to test: all of them when |c| <= 6, otherwise each
// singleton, each co-singleton, and 16 seeded random masks.
inline std::vector<VertexSet> sample_subsets(const VertexSet& c, std::uint64_t seed) {
    std::vector<VertexSet> out;
    const std::size_t k = c.size();
    auto from_bits = [&](auto&& pick) {
        std::vector<Vertex> ids;
        for (std::size_t i = 0; i < k; ++i)
            if (pick(i)) ids.push_back(c[i]);
        return VertexSet(std::move(ids));
    };
    if (k <= 6) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask)
            out.push_back(from_bits([&](std::size_t i) { return (mask >> i) & 1U; }));
        return out;
    }
    for (std::size_t j = 0; j < k; ++j) {
        out.push_back(from_bits([&](std::size_t i) { return i == j; }));
        out.push_back(from_bits([&](std::size_t i) { return i != j; }));
    }
    SeededRng rng(seed);
    for (int r = 0; r < 16; ++r) {
        const std::uint64_t mask = rng.next();
        out.push_back(from_bits([&](std::size_t i) { return (mask >> (i % 64)) & 1U; }));
    }
    return out;
}

} // namespace detail

/// Checks, on up to `cover_cap` minimum covers C and sampled C' of each:
/// deletion (mvc(t - C') = |C| - |C'|), leaves (leaves not inside C),
/// expansion (C' is a minimum cover of the subgraph expanded by C'), and
/// excluded-vertex deletion (C stays minimum in t - z for z in no cover).
inline CoverPropertyReport check_cover_properties(const Tree& t, std::size_t cover_cap = 16) {
    CoverPropertyReport report;
    const auto enumeration = enumerate_min_covers(t, cover_cap);
    report.covers_truncated = enumeration.truncated;
    const auto leaf_set = leaves(t);
    const auto excluded = cover_membership(t).always_excluded;
    auto fail = [&](const char* prop, std::string detail) { report.violations.push_back({prop, std::move(detail)}); };

    for (const auto& c : enumeration.covers) {
        ++report.covers_checked;
        const int k = static_cast<int>(c.size());
        if (leaf_set.is_subset_of(c)) fail("leaves", "cover " + detail::set_str(c) + " contains every leaf");

        for (const auto& sub : detail::sample_subsets(c, static_cast<std::uint64_t>(t.n()) * 7919U + c[0])) {
            ++report.subsets_checked;
            if (sub.size() < t.n()) {
                const int rest = min_cover_size(delete_vertices(t, sub));
                if (rest != k - static_cast<int>(sub.size()))
                    fail("deletion", "C=" + detail::set_str(c) + " C'=" + detail::set_str(sub) +
                                         ": mvc(t-C')=" + std::to_string(rest));
            }
            if (sub.empty()) continue;
            for (const auto& comp : expand_subgraph(t, sub).components) {
                int inside = 0;
                for (Vertex v : comp.labels) inside += sub.contains(v) ? 1 : 0;
                const int best = min_cover_size(comp);
                if (inside != best)
                    fail("expansion", "C=" + detail::set_str(c) + " C'=" + detail::set_str(sub) +
                                          ": component mvc " + std::to_string(best) + " vs " +
                                          std::to_string(inside));
            }
        }

        for (Vertex z : excluded) {
            const auto forest = delete_vertices(t, VertexSet{z});
            const int best = min_cover_size(forest);
            bool covers = true;
            for (const auto& comp : forest.components) {
                std::vector<bool> mask(comp.size());
                for (std::size_t i = 0; i < comp.size(); ++i) mask[i] = c.contains(comp.labels[i]);
                covers = covers && detail::covers_all_edges(comp.adjacency, mask);
            }
            if (!covers || best != k)
                fail("excluded_deletion", "z=" + std::to_string(z) + " C=" + detail::set_str(c) +
                                              ": mvc(t-z)=" + std::to_string(best));
        }
    }
    return report;
}

} // namespace treespec
