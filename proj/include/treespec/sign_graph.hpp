#pragma once

// Sign graphs (strong discrete nodal domains) of a vertex function.

#include <treespec/tree.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace treespec {

struct SignGraphDecomposition {
    std::vector<VertexSet> positive;  ///< ordered by smallest vertex id
    std::vector<VertexSet> negative;
    VertexSet zeros;
    double zero_tol = 0.0;

    std::size_t count() const noexcept { return positive.size() + negative.size(); }

    /// Positive and negative sign graphs together, ordered by smallest id.
    std::vector<VertexSet> all() const {
        std::vector<VertexSet> out = positive;
        out.insert(out.end(), negative.begin(), negative.end());
        std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return a[0] < b[0]; });
        return out;
    }
};

/// 1e-7 * ||f||_inf with the default relative factor.
inline double relative_zero_tol(const Eigen::VectorXd& f, double rel) {
    return f.size() ? rel * f.cwiseAbs().maxCoeff() : 0.0;
}

/// Maximal connected vertex sets with f > zero_tol (resp. f < -zero_tol).
inline SignGraphDecomposition sign_graphs(const Tree& t, const Eigen::VectorXd& f, double zero_tol) {
    if (static_cast<std::size_t>(f.size()) != t.n()) throw std::invalid_argument("vector length does not match tree");
    const std::size_t n = t.n();
    auto sign_of = [&](std::size_t v) { return f(static_cast<Eigen::Index>(v)) > zero_tol ? 1 : (f(static_cast<Eigen::Index>(v)) < -zero_tol ? -1 : 0); };

    SignGraphDecomposition d;
    d.zero_tol = zero_tol;
    std::vector<bool> seen(n, false);
    std::vector<Vertex> zeros;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        const int sg = sign_of(s);
        seen[s] = true;
        if (sg == 0) {
            zeros.push_back(static_cast<Vertex>(s));
            continue;
        }
        std::vector<Vertex> members{static_cast<Vertex>(s)};
        for (std::size_t head = 0; head < members.size(); ++head)
            for (Vertex v : t.neighbors(members[head])) {
                const auto vi = static_cast<std::size_t>(v);
                if (seen[vi] || sign_of(vi) != sg) continue;
                seen[vi] = true;
                members.push_back(v);
            }
        (sg > 0 ? d.positive : d.negative).emplace_back(std::move(members));
    }
    d.zeros = VertexSet(std::move(zeros));
    return d;
}

} // namespace treespec
