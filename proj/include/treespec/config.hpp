#pragma once

#include <cstddef>

namespace treespec {

/// Numeric knobs. The exact modules need none of these; they only govern
/// how floating-point spectra are read.
struct Tolerances {
    double jacobi_tol = 1e-12;     ///< off-diagonal Frobenius norm, relative to ||S||_F
    int max_sweeps = 100;          ///< Jacobi sweep budget
    double residual_tol = 1e-9;    ///< ||L v - lambda v||_inf <= residual_tol * max(1, |lambda|)
    double cluster_tol = 1e-8;     ///< eigenvalues within this of a target form its cluster
    double zero_tol_rel = 1e-7;    ///< |f(v)| <= zero_tol_rel * ||f||_inf counts as zero
    double vanish_tol = 1e-7;      ///< 1-eigenvectors on cover vertices
    double bound_tol = 1e-9;       ///< slack for the separation bounds and tightness
    double interlace_tol = 1e-9;   ///< slack for interlacing inequalities
    double quotient_tol = 1e-8;    ///< quotient spectrum vs closed form
    std::size_t cover_cap = 256;   ///< max enumerated minimum covers per tree
    std::size_t property_cover_cap = 16;  ///< covers used by the structural property checks
};

} // namespace treespec
