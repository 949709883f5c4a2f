#pragma once

// Theorem verification on a single tree: exact where the statement is
// exact (multiplicity, vanishing), numeric with explicit tolerances
// elsewhere. Failures are recorded with their witnesses, never thrown.

#include <treespec/charpoly.hpp>
#include <treespec/config.hpp>
#include <treespec/cover.hpp>
#include <treespec/sign_graph.hpp>
#include <treespec/spectral.hpp>
#include <treespec/tree.hpp>

#include <cmath>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace treespec {

/// Everything the checks share, computed once per tree.
struct Analysis {
    Tree tree;
    Tolerances tol;
    CoverReport cover;
    CoverEnumeration covers;
    NormalizedLaplacian laplacian;
    Spectrum spectrum;
    MatchingPolynomial poly;
    RationalKernel kernel;
    SeparationReport separation;
};

inline Analysis analyze(const Tree& t, const Tolerances& tol = {}) {
    auto cover = cover_report(t);
    auto covers = enumerate_min_covers(t, tol.cover_cap);
    auto L = build_laplacian(t);
    auto spect = spectrum(L, tol);
    auto poly = matching_polynomial(t);
    auto kernel = one_eigenspace_exact(t, cover.witness_cover);
    auto sep = separation(spect, cover, t, covers.covers, tol.cluster_tol);
    return Analysis{t, tol, std::move(cover), std::move(covers), std::move(L), std::move(spect),
                    std::move(poly), std::move(kernel), std::move(sep)};
}

enum class Status { pass, fail, vacuous };

inline const char* to_string(Status s) {
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::vacuous: return "vacuous";
    }
    return "?";
}

struct TheoremRecord {
    TheoremRecord() = default;
    explicit TheoremRecord(std::string id_) : id(std::move(id_)) {}

    std::string id;
    Status status = Status::pass;
    bool flagged = false;  ///< a numeric decision sat near its threshold
    std::vector<std::pair<std::string, double>> metrics;
    std::vector<std::string> notes;

    bool ok() const noexcept { return status != Status::fail; }

    void metric(std::string name, double value) { metrics.emplace_back(std::move(name), value); }
    void note(std::string text) { notes.push_back(std::move(text)); }
    void fail(std::string why) {
        status = Status::fail;
        notes.push_back(std::move(why));
    }
    void require(bool cond, const std::string& why) {
        if (!cond) fail(why);
    }

    double get(const std::string& name) const {
        for (const auto& [k, v] : metrics)
            if (k == name) return v;
        return std::nan("");
    }
};

struct VerificationReport {
    std::vector<TheoremRecord> records;

    bool passed() const {
        return std::all_of(records.begin(), records.end(), [](const auto& r) { return r.ok(); });
    }
    bool flagged() const {
        return std::any_of(records.begin(), records.end(), [](const auto& r) { return r.flagged; });
    }
    const TheoremRecord* find(const std::string& id) const {
        for (const auto& r : records)
            if (r.id == id) return &r;
        return nullptr;
    }
    const TheoremRecord* first_failure() const {
        for (const auto& r : records)
            if (!r.ok()) return &r;
        return nullptr;
    }
};

namespace detail {

inline std::string join(const VertexSet& s) { return set_str(s); }

// Row norms of an orthonormal basis: basis-independent size of the
// eigenspace at each vertex.
inline Eigen::VectorXd row_norms(const Eigen::MatrixXd& basis) {
    Eigen::VectorXd r(basis.rows());
    for (Eigen::Index i = 0; i < basis.rows(); ++i) r(i) = basis.row(i).norm();
    return r;
}

inline bool near_threshold(const Eigen::VectorXd& f, double zero_tol) {
    for (Eigen::Index i = 0; i < f.size(); ++i) {
        const double a = std::abs(f(i));
        if (a > zero_tol / 10.0 && a <= zero_tol * 10.0) return true;
    }
    return false;
}

inline bool has_zero(const Eigen::VectorXd& f, double zero_tol) {
    return (f.cwiseAbs().array() <= zero_tol).any();
}

} // namespace detail

/// Vertices where every cluster basis vector is within rel * (max row norm)
/// of zero; `near` is set when some row sits within a decade of the cut.
inline VertexSet common_vanishing_set(const Eigen::MatrixXd& basis, double rel, bool* near = nullptr) {
    const auto rows = detail::row_norms(basis);
    const double zt = rows.size() ? rel * rows.maxCoeff() : 0.0;
    std::vector<Vertex> z;
    for (Eigen::Index i = 0; i < rows.size(); ++i) {
        if (rows(i) <= zt) z.push_back(static_cast<Vertex>(i));
        if (near && rows(i) > zt / 10.0 && rows(i) <= zt * 10.0) *near = true;
    }
    return VertexSet(std::move(z));
}

namespace detail {

/// Number of sign graphs lacking exactly one vertex of `cover`.
inline std::size_t transversal_defects(const SignGraphDecomposition& d, const VertexSet& cover) {
    std::size_t bad = 0;
    for (const auto& g : d.all())
        if (g.intersect(cover).size() != 1) ++bad;
    return bad;
}

inline Eigen::VectorXd zero_extend(const Eigen::VectorXd& local, const VertexSet& domain, std::size_t n) {
    Eigen::VectorXd f = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < domain.size(); ++i) f(domain[i]) = local(static_cast<Eigen::Index>(i));
    return f;
}

} // namespace detail

// ---------------------------------------------------------------------------

inline TheoremRecord verify_koenig(const Analysis& a) {
    TheoremRecord r{"koenig"};
    const auto& c = a.cover;
    r.metric("matching_size", c.matching_size);
    r.metric("cover_size", c.cover_size);
    r.require(c.matching_size == c.cover_size, "maximum matching and minimum cover differ in size");
    r.require(is_vertex_cover(a.tree, c.witness_cover), "witness cover misses an edge");
    std::vector<int> used(a.tree.n(), 0);
    for (const auto& [u, v] : c.witness_matching) {
        r.require(a.tree.adjacent(u, v), "matching edge not in tree");
        ++used[static_cast<std::size_t>(u)];
        ++used[static_cast<std::size_t>(v)];
    }
    r.require(std::all_of(used.begin(), used.end(), [](int k) { return k <= 1; }), "matching edges share a vertex");
    r.require(2 * static_cast<std::size_t>(c.cover_size) <= a.tree.n(), "cover larger than n/2");
    r.require(c.witness_cover.is_subset_of(c.cover_union), "witness cover outside cover_union");
    r.require(c.cover_union.intersect(c.always_excluded).empty() &&
                  c.cover_union.size() + c.always_excluded.size() == a.tree.n(),
              "cover_union and always_excluded do not partition V");
    return r;
}

inline TheoremRecord verify_cover_properties(const Analysis& a) {
    TheoremRecord r{"cover_properties"};
    const auto props = check_cover_properties(a.tree, a.tol.property_cover_cap);
    r.metric("covers_checked", static_cast<double>(props.covers_checked));
    r.metric("subsets_checked", static_cast<double>(props.subsets_checked));
    if (props.covers_truncated) r.note("cover enumeration truncated; partial coverage");
    for (const auto& v : props.violations) r.fail(v.property + ": " + v.detail);
    return r;
}

inline TheoremRecord verify_multiplicity(const Analysis& a) {
    TheoremRecord r{"multiplicity_of_one"};
    const auto cluster = cluster_eigenvalues(a.spectrum, 1.0, a.tol.cluster_tol);
    const auto exact = multiplicity_of_one(a.poly);
    const auto formula = a.tree.n() - 2 * static_cast<std::size_t>(a.cover.cover_size);
    r.metric("numeric", static_cast<double>(cluster.multiplicity));
    r.metric("exact", static_cast<double>(exact));
    r.metric("n_minus_2c", static_cast<double>(formula));
    r.flagged = cluster.boundary_sensitive;
    if (cluster.boundary_sensitive) r.note("an eigenvalue lies within 10x cluster_tol of 1");
    r.require(cluster.multiplicity == exact, "numeric 1-cluster disagrees with exact multiplicity");
    r.require(exact == formula, "exact multiplicity differs from n - 2|C|");
    return r;
}

inline TheoremRecord verify_vanishing(const Analysis& a) {
    TheoremRecord r{"vanishing_on_covers"};
    const auto& kernel = a.kernel;
    r.metric("dimension", static_cast<double>(kernel.dimension));
    if (kernel.dimension == 0) r.status = Status::vacuous;

    for (const auto& c : a.covers.covers)
        r.require(c.is_subset_of(a.cover.cover_union), "enumerated cover " + detail::join(c) + " not inside cover_union");
    if (a.covers.truncated) r.note("cover enumeration truncated; cover_union check still exact");

    std::size_t nonzero = 0;
    for (std::size_t k = 0; k < kernel.basis.size(); ++k) {
        const auto& f = kernel.basis[k];
        for (Vertex c : a.cover.cover_union)
            if (sgn(f[static_cast<std::size_t>(c)]) != 0) ++nonzero;
        const auto lf = apply_laplacian_exact(a.tree, f);
        r.require(lf == f, "exact basis vector " + std::to_string(k) + " is not fixed by L");
    }
    r.metric("exact_nonzero_on_union", static_cast<double>(nonzero));
    r.require(nonzero == 0, "exact 1-eigenvector nonzero on cover_union");

    const auto cluster = cluster_eigenvalues(a.spectrum, 1.0, a.tol.cluster_tol);
    double worst = 0.0;
    if (cluster.multiplicity > 0) {
        const auto rows = detail::row_norms(cluster.basis);
        for (Vertex c : a.cover.cover_union) worst = std::max(worst, rows(c));
        for (std::size_t k = cluster.first; k < cluster.first + cluster.multiplicity; ++k)
            for (Vertex c : a.cover.cover_union)
                worst = std::max(worst, std::abs(a.spectrum.laplacian_vectors(c, static_cast<Eigen::Index>(k))));
    }
    r.metric("numeric_max_on_union", worst);
    r.require(worst <= a.tol.vanish_tol, "numeric 1-eigenvector exceeds vanish_tol on cover_union");
    return r;
}

inline TheoremRecord verify_separation_bounds(const Analysis& a) {
    TheoremRecord r{"separation_bounds"};
    const auto& s = a.separation;
    const double tol = a.tol.bound_tol;
    r.metric("lambda_bar", s.lambda_bar);
    r.metric("bound_volume", s.bound_volume);
    r.metric("bound_quotient", s.bound_quotient);
    r.metric("covers", static_cast<double>(s.per_cover.size()));
    double slack_v = s.bound_volume - s.lambda_bar, slack_q = s.bound_quotient - s.lambda_bar;
    r.require(slack_v >= -tol, "witness volume bound violated");
    r.require(slack_q >= -tol, "witness quotient bound violated");
    for (const auto& b : s.per_cover) {
        slack_v = std::min(slack_v, b.volume - s.lambda_bar);
        slack_q = std::min(slack_q, b.quotient - s.lambda_bar);
        r.require(b.volume >= s.lambda_bar - tol, "volume bound violated for cover " + detail::join(b.cover));
        r.require(b.quotient >= s.lambda_bar - tol, "quotient bound violated for cover " + detail::join(b.cover));
    }
    r.metric("min_slack_volume", slack_v);
    r.metric("min_slack_quotient", slack_q);
    r.metric("tight_volume", std::abs(s.bound_volume - s.lambda_bar) <= tol ? 1.0 : 0.0);
    r.metric("tight_quotient", std::abs(s.bound_quotient - s.lambda_bar) <= tol ? 1.0 : 0.0);
    if (a.covers.truncated) r.note("cover enumeration truncated; partial coverage");
    return r;
}

inline TheoremRecord verify_interlacing(const Analysis& a) {
    TheoremRecord r{"interlacing"};
    const auto tree_spec = to_std(a.spectrum.eigenvalues);
    double worst_closed = 0.0, worst_imag = 0.0;
    std::vector<VertexSet> covers = a.covers.covers;
    if (covers.empty()) covers.push_back(a.cover.witness_cover);
    for (const auto& c : covers) {
        const auto b = quotient_matrix(a.laplacian, c);
        const double corner = bound_quotient(a.tree, c);
        r.require(std::abs(b(0, 0) - corner) <= 1e-12, "quotient corner differs from A for " + detail::join(c));
        for (Eigen::Index i = 1; i < b.rows(); ++i) r.require(b(i, 0) == -1.0, "quotient first column is not -1");
        r.require(b.bottomRightCorner(b.rows() - 1, b.cols() - 1).isIdentity(0.0), "quotient lower block is not I");
        r.require(b.rowwise().sum().cwiseAbs().maxCoeff() <= 1e-12, "quotient row sums are not 0");

        const auto closed = quotient_spectrum_closed_form(a.tree.n(), c.size(), corner);
        const auto numeric = general_eigenvalues(b);
        worst_imag = std::max(worst_imag, numeric.max_imag);
        for (std::size_t i = 0; i < closed.size(); ++i)
            worst_closed = std::max(worst_closed, std::abs(closed[i] - numeric.real[i]));
        r.require(interlaces(tree_spec, closed, a.tol.interlace_tol),
                  "quotient spectrum does not interlace for cover " + detail::join(c));
        r.require(interlaces(tree_spec, numeric.real, a.tol.interlace_tol),
                  "numeric quotient spectrum does not interlace for cover " + detail::join(c));
    }
    r.metric("quotient_closed_form_error", worst_closed);
    r.metric("quotient_max_imag", worst_imag);
    r.require(worst_closed <= a.tol.quotient_tol, "quotient eigenvalues differ from {0, 1, 1+A}");
    r.require(worst_imag < 1e-10, "quotient eigenvalues not real");

    std::size_t dirichlet_checked = 0;
    for (Vertex z : a.cover.always_excluded) {
        const auto d = dirichlet(a.laplacian, VertexSet{z}.complement(a.tree.n()));
        const auto ds = spectrum(d, a.tol);
        r.require(interlaces(tree_spec, to_std(ds.eigenvalues), a.tol.interlace_tol),
                  "Dirichlet spectrum of T-" + std::to_string(z) + " does not interlace");
        ++dirichlet_checked;
    }
    r.metric("dirichlet_checked", static_cast<double>(dirichlet_checked));
    return r;
}

inline TheoremRecord verify_spectral_sanity(const Analysis& a) {
    TheoremRecord r{"spectral_sanity"};
    const auto& ev = a.spectrum.eigenvalues;
    const auto n = ev.size();
    double sym = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) sym = std::max(sym, std::abs(ev(k) - (2.0 - ev(n - 1 - k))));
    r.metric("symmetry_error", sym);
    r.metric("lambda_1", ev(0));
    r.metric("lambda_n", ev(n - 1));
    r.metric("max_scaled_residual", a.spectrum.max_scaled_residual());
    r.require(sym <= 1e-8, "spectrum not symmetric about 1");
    r.require(std::abs(ev(0)) <= 1e-10, "smallest eigenvalue is not 0");
    r.require(std::abs(ev(n - 1) - 2.0) <= 1e-10, "largest eigenvalue is not 2");
    r.require(ev.minCoeff() >= -1e-10 && ev.maxCoeff() <= 2.0 + 1e-10, "eigenvalue outside [0, 2]");
    r.require(a.spectrum.max_scaled_residual() <= a.tol.residual_tol, "eigenpair residual above residual_tol");
    const double p_tol = 1e-7 * std::max(1.0, coefficient_mass(a.poly));
    double worst = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) worst = std::max(worst, std::abs(eval_at(a.poly, ev(k))));
    r.metric("charpoly_max_at_eigenvalues", worst);
    r.metric("charpoly_tol", p_tol);
    r.require(worst <= p_tol, "characteristic polynomial not small at a numeric eigenvalue");
    return r;
}

// ---------------------------------------------------------------------------
// Sign graphs of pre-1 eigenvectors

struct DomainPiece {
    VertexSet domain;
    std::size_t position = 0;      ///< 1-based index of lambda_p in the Dirichlet spectrum; 0 if absent
    std::size_t cover_inside = 0;  ///< |C cap domain| for the witness cover
    int depth = 0;
};

namespace detail {

/// Splits a connected domain until lambda is a simple Dirichlet
/// eigenvalue with a nowhere-vanishing eigenvector on every piece.
/// Returns the summed positions of lambda.
inline std::size_t decompose_domain(const Analysis& a, const VertexSet& domain, double lambda, int depth,
                                    TheoremRecord& r, std::vector<DomainPiece>& pieces) {
    const auto& tol = a.tol;
    const auto d = dirichlet(a.laplacian, domain);
    const auto spect = spectrum(d, tol);
    const auto cluster = cluster_eigenvalues(spect, lambda, tol.cluster_tol);
    DomainPiece piece{domain, 0, domain.intersect(a.cover.witness_cover).size(), depth};
    if (cluster.boundary_sensitive) {
        r.flagged = true;
        r.note("Dirichlet cluster boundary-sensitive on " + join(domain));
    }
    if (cluster.multiplicity == 0) {
        r.flagged = true;
        r.note("component " + join(domain) + " does not contain lambda_p; excluded from the sum");
        pieces.push_back(piece);
        return 0;
    }
    if (cluster.multiplicity == 1) {
        const Eigen::VectorXd g = cluster.basis.col(0);
        const double zt = relative_zero_tol(g, tol.zero_tol_rel);
        if (near_threshold(g, zt)) {
            r.flagged = true;
            r.note("Dirichlet eigenvector near zero threshold on " + join(domain));
        }
        if (!has_zero(g, zt)) {
            piece.position = cluster.first + 1;
            const auto sg = sign_graphs(a.tree, zero_extend(g, domain, a.tree.n()), zt);
            r.require(sg.count() == piece.position, "component " + join(domain) + " has " + std::to_string(sg.count()) +
                                                        " sign graphs, position " + std::to_string(piece.position));
            pieces.push_back(piece);
            return piece.position;
        }
    }
    if (depth >= 64) {
        r.fail("decomposition did not terminate on " + join(domain));
        return 0;
    }
    std::vector<Vertex> z;
    for (Vertex local : common_vanishing_set(cluster.basis, tol.zero_tol_rel)) z.push_back(domain[static_cast<std::size_t>(local)]);
    if (z.empty()) {
        r.fail("multiple eigenvalue without common vanishing vertex on " + join(domain));
        return 0;
    }
    const VertexSet cut = domain.complement(a.tree.n()).unite(VertexSet(z));
    std::size_t total = 0;
    for (const auto& comp : delete_vertices(a.tree, cut).components)
        total += decompose_domain(a, comp.host_vertices(), lambda, depth + 1, r, pieces);
    return total;
}

inline Eigen::VectorXd generic_combination(const Eigen::MatrixXd& basis, int attempt) {
    Eigen::VectorXd f = Eigen::VectorXd::Zero(basis.rows());
    for (Eigen::Index k = 0; k < basis.cols(); ++k) {
        const double w = 1.0 + 0.6180339887 * static_cast<double>((k + 1) * (attempt + 1)) +
                         0.0141421356 * static_cast<double>(k * k);
        f += (k % 2 == 0 ? w : -w) * basis.col(k);
    }
    return f;
}

} // namespace detail

/// Pre-1 sign-graph transversal theorems. Case (a): some lambda_p
/// eigenvector has no zero entry; case (b): every one vanishes somewhere,
/// and the common vanishing set Z splits the tree into Dirichlet pieces.
inline TheoremRecord verify_sign_transversal(const Analysis& a) {
    TheoremRecord r{"sign_graph_transversal"};
    const auto& tol = a.tol;
    const auto& spect = a.spectrum;
    const std::size_t cover_size = static_cast<std::size_t>(a.cover.cover_size);
    const double lambda_p = a.separation.lambda_p;
    const auto cluster = cluster_eigenvalues(spect, lambda_p, tol.cluster_tol);
    r.metric("lambda_p", lambda_p);
    r.metric("multiplicity", static_cast<double>(cluster.multiplicity));
    r.metric("cover_size", static_cast<double>(cover_size));
    r.require(cluster.first + cluster.multiplicity == cover_size, "lambda_p is not the |C|-th eigenvalue");
    if (cluster.boundary_sensitive) {
        r.flagged = true;
        r.note("lambda_p cluster boundary-sensitive");
    }

    std::vector<VertexSet> covers = a.covers.covers;
    if (covers.empty()) covers.push_back(a.cover.witness_cover);
    if (a.covers.truncated) r.note("cover enumeration truncated; partial coverage");

    // Candidates that might avoid zeros: basis vectors and their sum.
    std::vector<Eigen::VectorXd> candidates;
    for (Eigen::Index k = 0; k < cluster.basis.cols(); ++k) candidates.emplace_back(cluster.basis.col(k));
    if (cluster.basis.cols() > 1) candidates.emplace_back(cluster.basis.rowwise().sum());

    const Eigen::VectorXd* nonvanishing = nullptr;
    for (const auto& f : candidates) {
        const double zt = relative_zero_tol(f, tol.zero_tol_rel);
        if (detail::near_threshold(f, zt)) {
            r.flagged = true;
            r.note("candidate eigenvector has an entry near the zero threshold");
        }
        if (!nonvanishing && !detail::has_zero(f, zt)) nonvanishing = &f;
    }

    auto check_sign_graphs = [&](const Eigen::VectorXd& f, const std::string& what, bool exact_count) {
        const auto sg = sign_graphs(a.tree, f, relative_zero_tol(f, tol.zero_tol_rel));
        if (exact_count)
            r.require(sg.count() == cover_size, what + " has " + std::to_string(sg.count()) + " sign graphs, |C| = " +
                                                    std::to_string(cover_size));
        else
            r.require(sg.count() <= cover_size, what + " has more than |C| sign graphs");
        for (const auto& c : covers) {
            const auto defects = detail::transversal_defects(sg, c);
            r.require(defects == 0, what + ": " + std::to_string(defects) + " sign graphs without exactly one vertex of " +
                                        detail::join(c));
        }
        return sg;
    };

    if (nonvanishing) {
        r.note("case a");
        r.metric("case", 0.0);
        const bool gap_ok = cluster.first == 0 || lambda_p - spect.eigenvalues(static_cast<Eigen::Index>(cluster.first) - 1) > tol.cluster_tol;
        r.require(cluster.multiplicity == 1 && gap_ok, "lambda_p with a nowhere-zero eigenvector is not simple");
        const auto sg = check_sign_graphs(*nonvanishing, "lambda_p eigenvector", true);
        r.metric("sign_graphs", static_cast<double>(sg.count()));
        for (const auto& g : sg.all())
            r.require(g.size() >= 2 || a.tree.n() < 2, "single-vertex sign graph " + detail::join(g));
        return r;
    }

    r.note("case b");
    r.metric("case", 1.0);
    bool z_near = false;
    const VertexSet z = common_vanishing_set(cluster.basis, tol.zero_tol_rel, &z_near);
    if (z_near) {
        r.flagged = true;
        r.note("common vanishing set decision near threshold");
    }
    r.metric("z_size", static_cast<double>(z.size()));
    r.note("Z = " + detail::join(z));
    r.require(!z.empty(), "no common vanishing vertex");
    r.require(z.intersect(a.cover.cover_union).empty(), "common vanishing set meets a minimum cover");
    if (z.empty() || z.size() >= a.tree.n()) return r;

    std::vector<DomainPiece> pieces;
    std::size_t positions = 0;
    int max_depth = 0;
    for (const auto& comp : delete_vertices(a.tree, z).components)
        positions += detail::decompose_domain(a, comp.host_vertices(), lambda_p, 1, r, pieces);
    for (const auto& p : pieces) {
        max_depth = std::max(max_depth, p.depth);
        r.require(p.position == 0 || p.position == p.cover_inside,
                  "piece " + detail::join(p.domain) + ": lambda_p at position " + std::to_string(p.position) +
                      " but cover has " + std::to_string(p.cover_inside) + " vertices there");
    }
    r.metric("pieces", static_cast<double>(pieces.size()));
    r.metric("max_depth", max_depth);
    r.metric("position_sum", static_cast<double>(positions));
    r.require(positions == cover_size, "positions sum to " + std::to_string(positions) + ", |C| = " + std::to_string(cover_size));
    if (max_depth > 1) r.note("decomposition needed more than one level");

    // An eigenvector with exactly |C| sign graphs: a generic combination
    // vanishing only on Z.
    bool found = false;
    for (int attempt = 0; attempt < 4 && !found; ++attempt) {
        const Eigen::VectorXd f = detail::generic_combination(cluster.basis, attempt);
        const double ft = relative_zero_tol(f, tol.zero_tol_rel);
        const auto sg = sign_graphs(a.tree, f, ft);
        if (sg.zeros != z || detail::near_threshold(f, ft)) continue;
        found = true;
        check_sign_graphs(f, "generic lambda_p eigenvector", true);
        r.metric("sign_graphs", static_cast<double>(sg.count()));
    }
    if (!found) {
        r.flagged = true;
        r.fail("no combination found that vanishes exactly on Z");
    }
    for (std::size_t k = 0; k < candidates.size(); ++k)
        check_sign_graphs(candidates[k], "cluster vector " + std::to_string(k), false);
    return r;
}

inline VerificationReport verify_all(const Analysis& a) {
    VerificationReport report;
    report.records.push_back(verify_koenig(a));
    report.records.push_back(verify_cover_properties(a));
    report.records.push_back(verify_spectral_sanity(a));
    report.records.push_back(verify_multiplicity(a));
    report.records.push_back(verify_vanishing(a));
    report.records.push_back(verify_separation_bounds(a));
    report.records.push_back(verify_interlacing(a));
    report.records.push_back(verify_sign_transversal(a));
    return report;
}

inline VerificationReport verify_all(const Tree& t, const Tolerances& tol = {}) { return verify_all(analyze(t, tol)); }

} // namespace treespec
