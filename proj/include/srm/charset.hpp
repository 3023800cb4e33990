#pragma once

#include "srm/surface.hpp"

namespace srm {

struct SkewHessianResult {
    Mat matrix;      // ([X_j, X_k] phi)(p), skew
    int rank = 0;    // singular values > tau * sigma_max
    double sigma_max = 0.0;
    /// Codimension bound from the rank argument when T phi != 0:
    /// C(Sigma) locally sits in a submanifold of codimension >= rank/2 + 1.
    int codim_bound = 0;
};

/// Skew Hessian ([X_j,X_k] phi)(p) of phi with respect to a field family;
/// entries X_j X_k phi - X_k X_j phi via nested directional derivatives.
SkewHessianResult skew_hessian(const std::vector<VectorField>& fields,
                               const LevelSetData& phi, const Vec& p,
                               double rank_tol = 1e-6);

/// The sharp-example fields on R^n (n > k >= 2):
///   X_j = d_j (j < k),  X_k = d_k + x1 d_{k+1} + x1^2 d_{k+2} + ...
/// Returned as a manifold model with vertical complement {d_{k+1}..d_n}.
ManifoldModel sharp_example_fields(int n, int k);

/// Surface {x_n = x_1^2} for the sharp example, with parameter box [-1,1]^{n-1}.
Hypersurface sharp_example_surface(int n);

/// Smallest bracket depth (1 = the fields themselves) at which iterated
/// brackets span R^n at p, capped at max_depth; returns 0 if the cap is hit.
int bracket_generating_step(const std::vector<VectorField>& fields, const Vec& p,
                            int dim, int max_depth = 6);

} // namespace srm
