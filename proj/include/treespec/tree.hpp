#pragma once

// Tree data model: construction from edge lists and Pruefer sequences,
// seeded uniform generation, vertex deletion and neighborhood expansion.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace treespec {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using Adjacency = std::vector<std::vector<Vertex>>;

enum class TreeErrorKind {
    empty_input,
    negative_id,
    self_loop,
    duplicate_edge,
    isolated_vertex,
    cycle,
    disconnected,
    too_few_vertices,
    out_of_range,
};

inline const char* to_string(TreeErrorKind kind) {
    switch (kind) {
    case TreeErrorKind::empty_input: return "empty edge list";
    case TreeErrorKind::negative_id: return "negative vertex id";
    case TreeErrorKind::self_loop: return "self-loop";
    case TreeErrorKind::duplicate_edge: return "duplicate edge";
    case TreeErrorKind::isolated_vertex: return "isolated vertex";
    case TreeErrorKind::cycle: return "cycle detected";
    case TreeErrorKind::disconnected: return "graph is disconnected";
    case TreeErrorKind::too_few_vertices: return "tree needs at least 2 vertices";
    case TreeErrorKind::out_of_range: return "vertex id out of range";
    }
    return "unknown tree error";
}

class TreeError : public std::invalid_argument {
public:
    TreeError(TreeErrorKind kind, const std::string& detail)
        : std::invalid_argument(std::string(to_string(kind)) + (detail.empty() ? "" : ": " + detail)),
          kind_(kind) {}

    TreeErrorKind kind() const noexcept { return kind_; }

private:
    TreeErrorKind kind_;
};

/// Sorted set of vertex ids of some host graph.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> ids) : members_(ids) { normalize(); }
    explicit VertexSet(std::vector<Vertex> ids) : members_(std::move(ids)) { normalize(); }

    static VertexSet from_mask(const std::vector<bool>& mask) {
        VertexSet s;
        for (std::size_t v = 0; v < mask.size(); ++v)
            if (mask[v]) s.members_.push_back(static_cast<Vertex>(v));
        return s;
    }

    bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }
    const std::vector<Vertex>& ids() const noexcept { return members_; }
    Vertex operator[](std::size_t i) const { return members_[i]; }

    std::vector<bool> mask(std::size_t n) const {
        std::vector<bool> m(n, false);
        for (Vertex v : members_) m[static_cast<std::size_t>(v)] = true;
        return m;
    }

    VertexSet complement(std::size_t n) const {
        std::vector<Vertex> out;
        out.reserve(n - std::min(n, members_.size()));
        std::size_t j = 0;
        for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
            if (j < members_.size() && members_[j] == v) {
                ++j;
                continue;
            }
            out.push_back(v);
        }
        VertexSet s;
        s.members_ = std::move(out);
        return s;
    }

    bool is_subset_of(const VertexSet& other) const {
        return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
    }

    VertexSet intersect(const VertexSet& other) const {
        VertexSet s;
        std::set_intersection(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                              std::back_inserter(s.members_));
        return s;
    }

    VertexSet minus(const VertexSet& other) const {
        VertexSet s;
        std::set_difference(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                            std::back_inserter(s.members_));
        return s;
    }

    VertexSet unite(const VertexSet& other) const {
        VertexSet s;
        std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                       std::back_inserter(s.members_));
        return s;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.members_ <=> b.members_; }

private:
    void normalize() {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    std::vector<Vertex> members_;
};

/// Connected acyclic simple graph on 0..n-1 with n >= 2. Immutable.
class Tree {
public:
    /// Validates and builds; throws TreeError naming the violated invariant.
    static Tree from_edges(const std::vector<Edge>& edges);

    std::size_t n() const noexcept { return adjacency_.size(); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    const Adjacency& adjacency() const noexcept { return adjacency_; }

    /// Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(n() - 1);
        for (std::size_t u = 0; u < n(); ++u)
            for (Vertex v : adjacency_[u])
                if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
        return out;
    }

    bool adjacent(Vertex u, Vertex v) const {
        const auto& nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    void check_vertex(Vertex v) const {
        if (v < 0 || static_cast<std::size_t>(v) >= n())
            throw TreeError(TreeErrorKind::out_of_range, std::to_string(v));
    }

    friend bool operator==(const Tree&, const Tree&) = default;

private:
    explicit Tree(Adjacency adjacency) : adjacency_(std::move(adjacency)) {}
    Adjacency adjacency_;
};

namespace detail {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[b] = a;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

inline std::string edge_str(const Edge& e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

} // namespace detail

inline Tree Tree::from_edges(const std::vector<Edge>& edges) {
    if (edges.empty()) throw TreeError(TreeErrorKind::empty_input, "");
    Vertex max_id = 0;
    for (const auto& e : edges) {
        if (e.first < 0 || e.second < 0) throw TreeError(TreeErrorKind::negative_id, detail::edge_str(e));
        if (e.first == e.second) throw TreeError(TreeErrorKind::self_loop, detail::edge_str(e));
        max_id = std::max({max_id, e.first, e.second});
    }
    const auto n = static_cast<std::size_t>(max_id) + 1;
    if (n < 2) throw TreeError(TreeErrorKind::too_few_vertices, "");

    std::vector<Edge> canon;
    canon.reserve(edges.size());
    for (const auto& [u, v] : edges) canon.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(canon.begin(), canon.end());
    if (auto dup = std::adjacent_find(canon.begin(), canon.end()); dup != canon.end())
        throw TreeError(TreeErrorKind::duplicate_edge, detail::edge_str(*dup));

    Adjacency adj(n);
    for (const auto& [u, v] : canon) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    for (std::size_t v = 0; v < n; ++v)
        if (adj[v].empty()) throw TreeError(TreeErrorKind::isolated_vertex, std::to_string(v));

    detail::DisjointSets sets(n);
    for (const auto& e : canon)
        if (!sets.unite(static_cast<std::size_t>(e.first), static_cast<std::size_t>(e.second)))
            throw TreeError(TreeErrorKind::cycle, "closing edge " + detail::edge_str(e));
    if (canon.size() != n - 1)
        throw TreeError(TreeErrorKind::disconnected,
                        std::to_string(n - canon.size()) + " components on " + std::to_string(n) + " vertices");

    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    return Tree(std::move(adj));
}

inline Tree from_edge_list(const std::vector<Edge>& edges) { return Tree::from_edges(edges); }

/// Decodes a Pruefer sequence of length n-2 over 0..n-1.
inline Tree from_pruefer(const std::vector<Vertex>& seq) {
    const std::size_t n = seq.size() + 2;
    std::vector<int> deg(n, 1);
    for (Vertex x : seq) {
        if (x < 0 || static_cast<std::size_t>(x) >= n)
            throw TreeError(TreeErrorKind::out_of_range, "Pruefer entry " + std::to_string(x));
        ++deg[static_cast<std::size_t>(x)];
    }
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (std::size_t v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.push(static_cast<Vertex>(v));

    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (Vertex x : seq) {
        const Vertex leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, x);
        if (--deg[static_cast<std::size_t>(x)] == 1) leaves.push(x);
    }
    const Vertex a = leaves.top();
    leaves.pop();
    const Vertex b = leaves.top();
    edges.emplace_back(a, b);
    return Tree::from_edges(edges);
}

inline std::vector<Vertex> to_pruefer(const Tree& t) {
    const std::size_t n = t.n();
    std::vector<int> deg(n);
    std::vector<bool> removed(n, false);
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (std::size_t v = 0; v < n; ++v) {
        deg[v] = t.degree(static_cast<Vertex>(v));
        if (deg[v] == 1) leaves.push(static_cast<Vertex>(v));
    }
    std::vector<Vertex> seq;
    seq.reserve(n - 2);
    while (seq.size() + 2 < n) {
        const Vertex leaf = leaves.top();
        leaves.pop();
        removed[static_cast<std::size_t>(leaf)] = true;
        for (Vertex u : t.neighbors(leaf)) {
            if (removed[static_cast<std::size_t>(u)]) continue;
            seq.push_back(u);
            if (--deg[static_cast<std::size_t>(u)] == 1) leaves.push(u);
            break;
        }
    }
    return seq;
}

/// Deterministic generator: std::mt19937_64 (bit-exact by the C++ standard)
/// with bounded draws by rejection, so streams reproduce across platforms.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound), bound >= 1. Rejects the low
    /// (2^64 mod bound) outputs so every residue is equally likely.
    std::uint64_t bounded(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = engine_();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::mt19937_64 engine_;
};

/// Uniform labeled tree: n-2 Pruefer entries drawn with SeededRng(seed).
inline Tree random_tree(std::size_t n, std::uint64_t seed) {
    if (n < 2) throw TreeError(TreeErrorKind::too_few_vertices, "n = " + std::to_string(n));
    SeededRng rng(seed);
    std::vector<Vertex> seq(n - 2);
    for (auto& x : seq) x = static_cast<Vertex>(rng.bounded(n));
    return from_pruefer(seq);
}

struct EnsembleMember {
    std::size_t n;
    std::uint64_t seed;
};

/// Ensemble specification: member i draws n uniformly in [min_n, max_n],
/// then a tree seed, both from one SeededRng(seed) stream.
inline std::vector<EnsembleMember> ensemble_plan(std::size_t count, std::size_t min_n, std::size_t max_n,
                                                 std::uint64_t seed) {
    if (min_n < 2 || max_n < min_n)
        throw std::invalid_argument("invalid ensemble range [" + std::to_string(min_n) + ", " +
                                    std::to_string(max_n) + "]");
    SeededRng rng(seed);
    std::vector<EnsembleMember> plan;
    plan.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = min_n + static_cast<std::size_t>(rng.bounded(max_n - min_n + 1));
        plan.push_back({n, rng.next()});
    }
    return plan;
}

/// Calls fn(tree) for every labeled tree on n vertices, in lexicographic
/// Pruefer order.
template <typename Fn>
void for_each_labeled_tree(std::size_t n, Fn&& fn) {
    if (n < 2) throw TreeError(TreeErrorKind::too_few_vertices, "n = " + std::to_string(n));
    std::vector<Vertex> seq(n - 2, 0);
    for (;;) {
        fn(from_pruefer(seq));
        std::size_t i = seq.size();
        while (i > 0) {
            --i;
            if (++seq[i] < static_cast<Vertex>(n)) goto next;
            seq[i] = 0;
        }
        return;
    next:;
    }
}

// ---------------------------------------------------------------------------
// Subgraphs

/// Connected piece of a host tree. May be a single isolated vertex.
struct Component {
    std::vector<Vertex> labels;  ///< host ids, ascending; local id i <-> labels[i]
    Adjacency adjacency;         ///< local ids, sorted neighbor lists

    std::size_t size() const noexcept { return labels.size(); }
    bool isolated() const noexcept { return labels.size() == 1; }

    std::size_t local_of(Vertex host) const {
        auto it = std::lower_bound(labels.begin(), labels.end(), host);
        if (it == labels.end() || *it != host) throw std::out_of_range("vertex not in component");
        return static_cast<std::size_t>(it - labels.begin());
    }

    VertexSet host_vertices() const { return VertexSet(labels); }

    /// The component as a Tree in local labels (needs >= 2 vertices).
    Tree as_tree() const {
        std::vector<Edge> edges;
        for (std::size_t u = 0; u < adjacency.size(); ++u)
            for (Vertex v : adjacency[u])
                if (static_cast<Vertex>(u) < v) edges.emplace_back(static_cast<Vertex>(u), v);
        return Tree::from_edges(edges);
    }
};

struct Forest {
    std::vector<Component> components;  ///< ordered by smallest host label

    std::size_t vertex_count() const {
        std::size_t k = 0;
        for (const auto& c : components) k += c.size();
        return k;
    }
};

namespace detail {

// Components of the subgraph with vertex mask `keep` and edges accepted by `edge_ok`.
template <typename EdgeOk>
Forest components_of(const Tree& t, const std::vector<bool>& keep, EdgeOk&& edge_ok) {
    const std::size_t n = t.n();
    std::vector<int> comp(n, -1);
    Forest forest;
    for (std::size_t s = 0; s < n; ++s) {
        if (!keep[s] || comp[s] >= 0) continue;
        const int id = static_cast<int>(forest.components.size());
        std::vector<Vertex> members{static_cast<Vertex>(s)};
        comp[s] = id;
        for (std::size_t head = 0; head < members.size(); ++head) {
            const Vertex u = members[head];
            for (Vertex v : t.neighbors(u)) {
                const auto vi = static_cast<std::size_t>(v);
                if (!keep[vi] || comp[vi] >= 0 || !edge_ok(u, v)) continue;
                comp[vi] = id;
                members.push_back(v);
            }
        }
        std::sort(members.begin(), members.end());
        Component c;
        c.labels = members;
        c.adjacency.resize(members.size());
        for (std::size_t i = 0; i < members.size(); ++i)
            for (Vertex v : t.neighbors(members[i]))
                if (keep[static_cast<std::size_t>(v)] && edge_ok(members[i], v))
                    c.adjacency[i].push_back(static_cast<Vertex>(c.local_of(v)));
        for (auto& nb : c.adjacency) std::sort(nb.begin(), nb.end());
        forest.components.push_back(std::move(c));
    }
    return forest;
}

} // namespace detail

/// Components of t - z with label maps back to t.
inline Forest delete_vertices(const Tree& t, const VertexSet& z) {
    for (Vertex v : z) t.check_vertex(v);
    if (z.size() >= t.n()) throw std::invalid_argument("cannot delete every vertex of the tree");
    auto keep = z.mask(t.n());
    keep.flip();
    return detail::components_of(t, keep, [](Vertex, Vertex) { return true; });
}

/// Subgraph on c and its neighbors, keeping only edges incident to c.
inline Forest expand_subgraph(const Tree& t, const VertexSet& c) {
    if (c.empty()) throw std::invalid_argument("expand_subgraph needs a nonempty vertex set");
    for (Vertex v : c) t.check_vertex(v);
    const auto in_c = c.mask(t.n());
    std::vector<bool> keep = in_c;
    for (Vertex v : c)
        for (Vertex u : t.neighbors(v)) keep[static_cast<std::size_t>(u)] = true;
    return detail::components_of(t, keep, [&](Vertex u, Vertex v) {
        return in_c[static_cast<std::size_t>(u)] || in_c[static_cast<std::size_t>(v)];
    });
}

inline VertexSet leaves(const Tree& t) {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < t.n(); ++v)
        if (t.degree(static_cast<Vertex>(v)) == 1) out.push_back(static_cast<Vertex>(v));
    return VertexSet(std::move(out));
}

inline int degree(const Tree& t, Vertex v) {
    t.check_vertex(v);
    return t.degree(v);
}

/// Sum of degrees over s (the volume of s).
inline long measure(const Tree& t, const VertexSet& s) {
    long total = 0;
    for (Vertex v : s) total += degree(t, v);
    return total;
}

/// Relabels vertex v to perm[v].
inline Tree relabel(const Tree& t, const std::vector<Vertex>& perm) {
    std::vector<Edge> edges;
    for (const auto& [u, v] : t.edges())
        edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return Tree::from_edges(edges);
}

// ---------------------------------------------------------------------------
// Edge-list text format

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// One "u v" pair per line, 0-based ids; '#' starts a comment.
inline std::vector<Edge> parse_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        long long u = 0, v = 0;
        if (!(fields >> u)) {
            std::string rest;
            fields.clear();
            if (fields >> rest) throw ParseError(lineno, "expected vertex id, got '" + rest + "'");
            continue;
        }
        if (!(fields >> v)) throw ParseError(lineno, "expected two vertex ids");
        std::string extra;
        if (fields >> extra) throw ParseError(lineno, "unexpected trailing token '" + extra + "'");
        if (u < 0 || v < 0) throw ParseError(lineno, "vertex ids must be non-negative");
        if (u > 1'000'000 || v > 1'000'000) throw ParseError(lineno, "vertex id too large");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return edges;
}

inline std::string format_edge_list(const Tree& t) {
    std::string out;
    for (const auto& [u, v] : t.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

} // namespace treespec
