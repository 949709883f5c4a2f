#pragma once

// Normalized and Dirichlet normalized Laplacians, a cyclic Jacobi
// eigensolver for their symmetrizations, eigenvalue clusters, and the
// separation bounds from minimum vertex covers.

#include <treespec/config.hpp>
#include <treespec/cover.hpp>
#include <treespec/tree.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace treespec {

struct NormalizedLaplacian {
    Eigen::MatrixXd entries;   ///< L(u,u) = 1, L(u,v) = -1/deg u for u ~ v
    std::vector<int> degrees;

    std::size_t n() const noexcept { return degrees.size(); }
};

inline NormalizedLaplacian build_laplacian(const Tree& t) {
    const auto n = static_cast<Eigen::Index>(t.n());
    NormalizedLaplacian L;
    L.entries = Eigen::MatrixXd::Identity(n, n);
    L.degrees.resize(t.n());
    for (Eigen::Index u = 0; u < n; ++u) {
        const int d = t.degree(static_cast<Vertex>(u));
        L.degrees[static_cast<std::size_t>(u)] = d;
        for (Vertex v : t.neighbors(static_cast<Vertex>(u))) L.entries(u, v) = -1.0 / d;
    }
    return L;
}

namespace detail {

// D^{1/2} M D^{-1/2} for an operator whose off-diagonals are -1/deg(row).
inline Eigen::MatrixXd symmetrize(const Eigen::MatrixXd& m, const std::vector<int>& degrees) {
    Eigen::MatrixXd s = m;
    const auto n = m.rows();
    for (Eigen::Index u = 0; u < n; ++u)
        for (Eigen::Index v = 0; v < n; ++v)
            if (u != v && m(u, v) != 0.0)
                s(u, v) = -1.0 / std::sqrt(static_cast<double>(degrees[static_cast<std::size_t>(u)]) *
                                           degrees[static_cast<std::size_t>(v)]);
    return s;
}

} // namespace detail

/// S = D^{1/2} L D^{-1/2}, with S(u,v) = -1/sqrt(deg u deg v) off the diagonal.
inline Eigen::MatrixXd symmetrize(const NormalizedLaplacian& L) { return detail::symmetrize(L.entries, L.degrees); }

/// L restricted to rows and columns of a vertex subset, keeping host degrees.
struct DirichletLaplacian {
    VertexSet domain;
    Eigen::MatrixXd entries;
    std::vector<int> degrees;  ///< host degrees of domain vertices, in domain order

    std::size_t n() const noexcept { return domain.size(); }
};

inline DirichletLaplacian dirichlet(const NormalizedLaplacian& L, const VertexSet& omega) {
    if (omega.empty()) throw std::invalid_argument("Dirichlet domain must be nonempty");
    for (Vertex v : omega)
        if (v < 0 || static_cast<std::size_t>(v) >= L.n()) throw std::out_of_range("Dirichlet domain vertex");
    const auto m = static_cast<Eigen::Index>(omega.size());
    DirichletLaplacian D;
    D.domain = omega;
    D.entries.resize(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        D.degrees.push_back(L.degrees[static_cast<std::size_t>(omega[static_cast<std::size_t>(i)])]);
        for (Eigen::Index j = 0; j < m; ++j)
            D.entries(i, j) = L.entries(omega[static_cast<std::size_t>(i)], omega[static_cast<std::size_t>(j)]);
    }
    return D;
}

inline Eigen::MatrixXd symmetrize(const DirichletLaplacian& D) { return detail::symmetrize(D.entries, D.degrees); }

// ---------------------------------------------------------------------------
// Jacobi eigensolver

class EigenError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SymmetricEigen {
    Eigen::VectorXd values;   ///< ascending
    Eigen::MatrixXd vectors;  ///< orthonormal columns
    int sweeps = 0;
};

/// Cyclic-by-row Jacobi: sweep all pairs (p < q) in order, rotating each
/// nonzero a_pq to zero, until the off-diagonal Frobenius norm is at most
/// tol * ||S||_F. Eigenvalues are sorted ascending (stable for ties) and
/// each eigenvector is signed so its first entry of maximal magnitude is
/// positive.
inline SymmetricEigen jacobi_eigen(const Eigen::MatrixXd& s, double tol = 1e-12, int max_sweeps = 100) {
    if (s.rows() != s.cols()) throw std::invalid_argument("eigensolve needs a square matrix");
    const Eigen::Index n = s.rows();
    const double asym = n ? (s - s.transpose()).cwiseAbs().maxCoeff() : 0.0;
    if (asym > 1e-12) throw std::invalid_argument("eigensolve needs a symmetric matrix (asymmetry " + std::to_string(asym) + ")");

    Eigen::MatrixXd a = 0.5 * (s + s.transpose());
    Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
    const double scale = std::max(a.norm(), std::numeric_limits<double>::min());
    auto off_norm = [&] {
        double sum = 0.0;
        for (Eigen::Index p = 0; p < n; ++p)
            for (Eigen::Index q = p + 1; q < n; ++q) sum += 2.0 * a(p, q) * a(p, q);
        return std::sqrt(sum);
    };

    int sweep = 0;
    while (off_norm() > tol * scale) {
        if (sweep == max_sweeps)
            throw EigenError("Jacobi did not converge in " + std::to_string(max_sweeps) + " sweeps");
        ++sweep;
        for (Eigen::Index p = 0; p < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t = 0.0;
                if (std::abs(theta) > 1e150)
                    t = 0.5 / theta;
                else
                    t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * c;
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - sn * akq;
                    a(k, q) = sn * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - sn * aqk;
                    a(q, k) = sn * apk + c * aqk;
                }
                a(p, q) = a(q, p) = 0.0;
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - sn * vkq;
                    v(k, q) = sn * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) { return a(i, i) < a(j, j); });

    SymmetricEigen out;
    out.sweeps = sweep;
    out.values.resize(n);
    out.vectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const auto src = order[static_cast<std::size_t>(k)];
        out.values(k) = a(src, src);
        Eigen::VectorXd col = v.col(src);
        const double peak = col.cwiseAbs().maxCoeff();
        for (Eigen::Index i = 0; i < n; ++i) {
            if (std::abs(col(i)) >= peak * (1.0 - 1e-9)) {
                if (col(i) < 0) col = -col;
                break;
            }
        }
        out.vectors.col(k) = col;
    }
    return out;
}

struct Spectrum {
    Eigen::VectorXd eigenvalues;          ///< non-decreasing
    Eigen::MatrixXd symmetric_vectors;    ///< orthonormal eigenvectors of the symmetrization
    Eigen::MatrixXd laplacian_vectors;    ///< D^{-1/2}-scaled, unit 2-norm eigenvectors of L
    Eigen::VectorXd residuals;            ///< ||L v - lambda v||_inf per pair
    int sweeps = 0;

    std::size_t size() const noexcept { return static_cast<std::size_t>(eigenvalues.size()); }

    double max_scaled_residual() const {
        double worst = 0.0;
        for (Eigen::Index k = 0; k < eigenvalues.size(); ++k)
            worst = std::max(worst, residuals(k) / std::max(1.0, std::abs(eigenvalues(k))));
        return worst;
    }
};

namespace detail {

inline Spectrum spectrum_of(const Eigen::MatrixXd& op, const std::vector<int>& degrees, const Tolerances& tol) {
    const Eigen::MatrixXd sym = detail::symmetrize(op, degrees);
    auto eig = jacobi_eigen(sym, tol.jacobi_tol, tol.max_sweeps);
    const auto n = op.rows();
    Spectrum spect;
    spect.sweeps = eig.sweeps;
    spect.eigenvalues = eig.values;
    spect.symmetric_vectors = eig.vectors;
    spect.laplacian_vectors.resize(n, n);
    spect.residuals.resize(n);
    Eigen::VectorXd inv_sqrt_deg(n);
    for (Eigen::Index i = 0; i < n; ++i) inv_sqrt_deg(i) = 1.0 / std::sqrt(static_cast<double>(degrees[static_cast<std::size_t>(i)]));
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::VectorXd f = inv_sqrt_deg.cwiseProduct(eig.vectors.col(k));
        f /= f.norm();
        spect.laplacian_vectors.col(k) = f;
        spect.residuals(k) = (op * f - eig.values(k) * f).cwiseAbs().maxCoeff();
    }
    return spect;
}

} // namespace detail

/// Full eigendecomposition of a symmetric matrix; no Laplacian back-mapping.
inline SymmetricEigen eigensolve(const Eigen::MatrixXd& s, const Tolerances& tol = {}) {
    return jacobi_eigen(s, tol.jacobi_tol, tol.max_sweeps);
}

inline Spectrum spectrum(const NormalizedLaplacian& L, const Tolerances& tol = {}) {
    return detail::spectrum_of(L.entries, L.degrees, tol);
}

inline Spectrum spectrum(const DirichletLaplacian& D, const Tolerances& tol = {}) {
    return detail::spectrum_of(D.entries, D.degrees, tol);
}

struct Cluster {
    double target = 0.0;
    std::size_t multiplicity = 0;
    std::size_t first = 0;        ///< index range [first, first + multiplicity)
    Eigen::MatrixXd basis;        ///< orthonormal columns (symmetric eigenvectors)
    bool boundary_sensitive = false;  ///< some eigenvalue within [tol, 10 tol] of target
};

inline Cluster cluster_eigenvalues(const Spectrum& spect, double target, double cluster_tol) {
    Cluster c;
    c.target = target;
    const auto n = static_cast<std::size_t>(spect.eigenvalues.size());
    bool found = false;
    for (std::size_t k = 0; k < n; ++k) {
        const double d = std::abs(spect.eigenvalues(static_cast<Eigen::Index>(k)) - target);
        if (d <= cluster_tol) {
            if (!found) c.first = k;
            found = true;
            ++c.multiplicity;
        } else if (d <= 10.0 * cluster_tol) {
            c.boundary_sensitive = true;
        }
    }
    if (!found) {
        c.first = static_cast<std::size_t>(std::lower_bound(spect.eigenvalues.data(), spect.eigenvalues.data() + n, target) -
                                           spect.eigenvalues.data());
    }
    c.basis = spect.symmetric_vectors.middleCols(static_cast<Eigen::Index>(c.first), static_cast<Eigen::Index>(c.multiplicity));
    return c;
}

/// True when the ascending `inner` interlaces the ascending `outer`:
/// outer_i <= inner_i <= outer_{n-m+i}, up to `slack`.
inline bool interlaces(const std::vector<double>& outer, const std::vector<double>& inner, double slack) {
    const std::size_t n = outer.size(), m = inner.size();
    if (m > n) return false;
    for (std::size_t i = 0; i < m; ++i)
        if (inner[i] < outer[i] - slack || inner[i] > outer[n - m + i] + slack) return false;
    return true;
}

inline std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

// ---------------------------------------------------------------------------
// Separation bounds

/// mu(V - C) / mu(C).
inline double bound_volume(const Tree& t, const VertexSet& cover) {
    return static_cast<double>(measure(t, cover.complement(t.n()))) / static_cast<double>(measure(t, cover));
}

/// A = 1 - (1/|C|) sum over edges uv inside C of (1/deg u + 1/deg v).
inline double bound_quotient(const Tree& t, const VertexSet& cover) {
    double inner = 0.0;
    for (const auto& [u, v] : t.edges())
        if (cover.contains(u) && cover.contains(v)) inner += 1.0 / t.degree(u) + 1.0 / t.degree(v);
    return 1.0 - inner / static_cast<double>(cover.size());
}

/// Average-row-sum quotient for the partition {C} + singletons of V - C.
/// Row/column 0 is the cover block; then V - C in ascending id.
inline Eigen::MatrixXd quotient_matrix(const NormalizedLaplacian& L, const VertexSet& cover) {
    if (cover.empty()) throw std::invalid_argument("quotient_matrix needs a nonempty cover");
    const auto rest = cover.complement(L.n());
    for (Vertex u : rest)
        for (Vertex v : rest)
            if (u != v && L.entries(u, v) != 0.0)
                throw std::invalid_argument("not a vertex cover: edge " + std::to_string(u) + "-" + std::to_string(v) +
                                            " is uncovered");
    const auto m = static_cast<Eigen::Index>(rest.size()) + 1;
    const double k = static_cast<double>(cover.size());
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(m, m);
    for (Vertex u : cover)
        for (Vertex w : cover) b(0, 0) += L.entries(u, w);
    b(0, 0) /= k;
    for (Eigen::Index i = 1; i < m; ++i) {
        const Vertex vi = rest[static_cast<std::size_t>(i - 1)];
        for (Vertex u : cover) {
            b(0, i) += L.entries(u, vi);
            b(i, 0) += L.entries(vi, u);
        }
        b(0, i) /= k;
        for (Eigen::Index j = 1; j < m; ++j) b(i, j) = L.entries(vi, rest[static_cast<std::size_t>(j - 1)]);
    }
    return b;
}

/// {0, 1 (n - |C| - 1 times), 1 + A}, ascending.
inline std::vector<double> quotient_spectrum_closed_form(std::size_t n, std::size_t cover_size, double a) {
    std::vector<double> out{0.0};
    out.insert(out.end(), n - cover_size - 1, 1.0);
    out.push_back(1.0 + a);
    std::sort(out.begin(), out.end());
    return out;
}

struct GeneralEigenvalues {
    std::vector<double> real;  ///< ascending
    double max_imag = 0.0;
};

/// Eigenvalues of a small nonsymmetric matrix (Eigen's real Schur solver).
inline GeneralEigenvalues general_eigenvalues(const Eigen::MatrixXd& m) {
    Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
    if (solver.info() != Eigen::Success) throw EigenError("general eigensolver failed");
    GeneralEigenvalues out;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        const auto z = solver.eigenvalues()(i);
        out.real.push_back(z.real());
        out.max_imag = std::max(out.max_imag, std::abs(z.imag()));
    }
    std::sort(out.real.begin(), out.real.end());
    return out;
}

struct CoverBounds {
    VertexSet cover;
    double volume = 0.0;
    double quotient = 0.0;
};

struct SeparationReport {
    double lambda_bar = 0.0;   ///< min |1 - lambda| over eigenvalues off the 1-cluster
    double lambda_p = 0.0;     ///< largest eigenvalue below the 1-cluster
    std::size_t lambda_p_index = 0;
    double bound_volume = 0.0;    ///< for the witness cover
    double bound_quotient = 0.0;  ///< for the witness cover
    double min_bound_volume = 0.0;
    double min_bound_quotient = 0.0;
    std::vector<double> quotient_spectrum;
    std::vector<CoverBounds> per_cover;
};

inline SeparationReport separation(const Spectrum& spect, const CoverReport& cover, const Tree& t,
                                   const std::vector<VertexSet>& covers, double cluster_tol) {
    SeparationReport r;
    r.lambda_bar = std::numeric_limits<double>::infinity();
    bool have_p = false;
    for (Eigen::Index k = 0; k < spect.eigenvalues.size(); ++k) {
        const double lam = spect.eigenvalues(k);
        if (std::abs(1.0 - lam) <= cluster_tol) continue;
        r.lambda_bar = std::min(r.lambda_bar, std::abs(1.0 - lam));
        if (lam < 1.0) {
            r.lambda_p = lam;
            r.lambda_p_index = static_cast<std::size_t>(k);
            have_p = true;
        }
    }
    if (!have_p) throw std::logic_error("spectrum has no eigenvalue below 1");
    r.bound_volume = bound_volume(t, cover.witness_cover);
    r.bound_quotient = bound_quotient(t, cover.witness_cover);
    r.min_bound_volume = r.bound_volume;
    r.min_bound_quotient = r.bound_quotient;
    for (const auto& c : covers) {
        CoverBounds b{c, bound_volume(t, c), bound_quotient(t, c)};
        r.min_bound_volume = std::min(r.min_bound_volume, b.volume);
        r.min_bound_quotient = std::min(r.min_bound_quotient, b.quotient);
        r.per_cover.push_back(std::move(b));
    }
    r.quotient_spectrum = quotient_spectrum_closed_form(t.n(), cover.witness_cover.size(), r.bound_quotient);
    return r;
}

} // namespace treespec
