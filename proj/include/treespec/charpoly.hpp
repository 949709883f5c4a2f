#pragma once

// Exact characteristic polynomial of the normalized Laplacian of a tree
// through its matching expansion, and the exact 1-eigenspace.
//
// On a tree every nonzero term of det(xI - L) comes from a matching M,
// contributing (-1)^|M| (x-1)^(n-2|M|) prod_{v in M} 1/deg v. Collecting
// by |M| = k gives
//
//     P(x) = sum_k (-1)^k c_k y^(n-2k),   y = x - 1,
//     c_k  = sum over k-edge matchings of prod over matched vertices 1/deg v.

#include <treespec/cover.hpp>
#include <treespec/rational.hpp>
#include <treespec/tree.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace treespec {

struct MatchingPolynomial {
    std::size_t n = 0;
    std::vector<Rational> coeffs;  ///< c_0 .. c_nu, nu = maximum matching size; c_nu != 0

    std::size_t max_matching_size() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }

    /// Dense coefficients of P in y: result[j] multiplies y^j.
    std::vector<Rational> in_y() const {
        std::vector<Rational> a(n + 1);
        for (std::size_t k = 0; k < coeffs.size(); ++k) a[n - 2 * k] = (k % 2 == 0) ? coeffs[k] : Rational(-coeffs[k]);
        return a;
    }

    friend bool operator==(const MatchingPolynomial& a, const MatchingPolynomial& b) {
        return a.n == b.n && a.coeffs == b.coeffs;
    }
};

namespace detail {

using Poly = std::vector<Rational>;

inline void add_into(Poly& acc, const Poly& p, std::size_t shift, const Rational& scale, std::size_t limit) {
    for (std::size_t i = 0; i < p.size() && i + shift <= limit; ++i) {
        if (sgn(p[i]) == 0) continue;
        if (acc.size() <= i + shift) acc.resize(i + shift + 1);
        acc[i + shift] += p[i] * scale;
    }
}

inline Poly multiply(const Poly& a, const Poly& b, std::size_t limit) {
    Poly out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= limit; ++j) {
            if (sgn(b[j]) == 0) continue;
            if (out.size() <= i + j) out.resize(i + j + 1);
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

inline Poly sum(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

} // namespace detail

/// Matching generating sums by rooted DP. Per vertex keep two polynomials
/// in the number of matched edges: root free, and root matched to a child.
/// Attaching child c to v either leaves c's subtree independent or, when
/// both are free, adds the edge vc with weight 1/(deg v * deg c).
inline MatchingPolynomial matching_polynomial(const Tree& t) {
    const std::size_t n = t.n();
    const std::size_t limit = n / 2;
    const detail::RootedForest rooted(t.adjacency());
    std::vector<detail::Poly> free_root(n, detail::Poly{Rational(1)});
    std::vector<detail::Poly> matched_root(n);

    for (auto it = rooted.order.rbegin(); it != rooted.order.rend(); ++it) {
        const Vertex c = *it;
        const Vertex v = rooted.parent[static_cast<std::size_t>(c)];
        if (v < 0) continue;
        const auto ci = static_cast<std::size_t>(c);
        const auto vi = static_cast<std::size_t>(v);
        const detail::Poly child_any = detail::sum(free_root[ci], matched_root[ci]);
        const Rational weight(1, static_cast<unsigned long>(t.degree(v) * t.degree(c)));

        detail::Poly new_matched = detail::multiply(matched_root[vi], child_any, limit);
        detail::add_into(new_matched, detail::multiply(free_root[vi], free_root[ci], limit), 1, weight, limit);
        free_root[vi] = detail::multiply(free_root[vi], child_any, limit);
        matched_root[vi] = std::move(new_matched);
        free_root[ci].clear();
        matched_root[ci].clear();
    }
    const auto root = static_cast<std::size_t>(rooted.roots.front());
    MatchingPolynomial p;
    p.n = n;
    p.coeffs = detail::sum(free_root[root], matched_root[root]);
    while (!p.coeffs.empty() && sgn(p.coeffs.back()) == 0) p.coeffs.pop_back();
    return p;
}

/// Exact multiplicity of the eigenvalue 1: n minus twice the top degree.
inline std::size_t multiplicity_of_one(const MatchingPolynomial& poly) {
    return poly.n - 2 * poly.max_matching_size();
}

inline double eval_at(const MatchingPolynomial& poly, double x) {
    const double y = x - 1.0;
    double acc = 0.0;
    // Horner in y^2, then multiply by y^(n - 2 nu).
    for (std::size_t k = 0; k < poly.coeffs.size(); ++k) {
        const double c = poly.coeffs[k].get_d();
        acc = acc * y * y + ((k % 2 == 0) ? c : -c);
    }
    return acc * std::pow(y, static_cast<double>(multiplicity_of_one(poly)));
}

/// Sum of |c_k|, the scale for residual tolerances of P at numeric roots.
inline double coefficient_mass(const MatchingPolynomial& poly) {
    double total = 0.0;
    for (const auto& c : poly.coeffs) total += std::abs(c.get_d());
    return total;
}

/// "y^6 - 13/9 y^4 + 4/9 y^2"
inline std::string format_in_y(const MatchingPolynomial& poly) {
    std::string out;
    for (std::size_t k = 0; k < poly.coeffs.size(); ++k) {
        const std::size_t power = poly.n - 2 * k;
        const Rational& c = poly.coeffs[k];
        const bool negative = k % 2 == 1;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const bool unit = c == 1;
        if (!unit || power == 0) out += to_string(c);
        if (power > 0) {
            if (!unit) out += " ";
            out += "y";
            if (power > 1) out += "^" + std::to_string(power);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exact linear algebra

/// Basis of the right nullspace of a dense rational matrix, by reduction
/// to reduced row echelon form. One basis vector per free column, with a
/// 1 in that column.
inline std::vector<RationalVector> rational_nullspace(std::vector<RationalVector> rows, std::size_t cols) {
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && sgn(rows[piv][col]) == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const Rational inv = 1 / rows[r][col];
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || sgn(rows[i][col]) == 0) continue;
            const Rational factor = rows[i][col];
            for (std::size_t j = col; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
        }
        pivot_cols.push_back(col);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(cols);
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -rows[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// (L f)(u) = f(u) - (1/deg u) sum_{v ~ u} f(v), exactly.
inline RationalVector apply_laplacian_exact(const Tree& t, const RationalVector& f) {
    if (f.size() != t.n()) throw std::invalid_argument("vector length does not match tree");
    RationalVector out(t.n());
    for (std::size_t u = 0; u < t.n(); ++u) {
        Rational s;
        for (Vertex v : t.neighbors(static_cast<Vertex>(u))) s += f[static_cast<std::size_t>(v)];
        out[u] = f[u] - s / t.degree(static_cast<Vertex>(u));
    }
    return out;
}

struct RationalKernel {
    std::size_t dimension = 0;
    std::vector<RationalVector> basis;  ///< vectors over all n vertices
};

/// The 1-eigenspace, built by fixing f = 0 on the cover and solving
/// sum_{v ~ c} f(v) = 0 for every cover vertex c over the unknowns V - C.
/// Throws std::logic_error if the dimension is not n - 2|C|.
inline RationalKernel one_eigenspace_exact(const Tree& t, const VertexSet& cover) {
    for (Vertex v : cover) t.check_vertex(v);
    if (!is_vertex_cover(t, cover)) throw std::invalid_argument("not a vertex cover");
    const auto unknowns = cover.complement(t.n());
    std::vector<int> column(t.n(), -1);
    for (std::size_t i = 0; i < unknowns.size(); ++i) column[static_cast<std::size_t>(unknowns[i])] = static_cast<int>(i);

    std::vector<RationalVector> rows;
    rows.reserve(cover.size());
    for (Vertex c : cover) {
        RationalVector row(unknowns.size());
        for (Vertex v : t.neighbors(c))
            if (column[static_cast<std::size_t>(v)] >= 0) row[static_cast<std::size_t>(column[static_cast<std::size_t>(v)])] = 1;
        rows.push_back(std::move(row));
    }
    auto local = rational_nullspace(std::move(rows), unknowns.size());

    RationalKernel kernel;
    kernel.dimension = local.size();
    for (auto& v : local) {
        RationalVector full(t.n());
        for (std::size_t i = 0; i < unknowns.size(); ++i) full[static_cast<std::size_t>(unknowns[i])] = v[i];
        kernel.basis.push_back(std::move(full));
    }
    const std::size_t expected = t.n() - 2 * cover.size();
    if (2 * cover.size() > t.n() || kernel.dimension != expected)
        throw std::logic_error("1-eigenspace has dimension " + std::to_string(kernel.dimension) + ", expected " +
                               std::to_string(expected));
    return kernel;
}

} // namespace treespec
