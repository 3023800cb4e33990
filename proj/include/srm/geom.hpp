#pragma once

#include "srm/surface.hpp"

#include <complex>

namespace srm {

struct CurvatureData {
    Mat II0;                 // k x k in the SurfaceFrame basis
    double H = 0.0;          // trace(II0)
    double trace_II0_sq = 0.0;
    std::vector<std::complex<double>> eigenvalues;
    double div_nu = 0.0;
    double div_sigma_nu = 0.0;
    double ric_nu_nu = 0.0;
};

struct MeasureResult {
    double value = 0.0;
    double estimated_error = 0.0; // Richardson comparison of two resolutions
    long node_count = 0;
    std::string rule;
};

/// Horizontal second fundamental form; entries <nabla_{e_i} nu, e_j> in the
/// SurfaceFrame basis. Analytic derivative path when the level set carries a
/// Hessian, otherwise central differences along ambient straight lines.
Mat second_fundamental_form(const ManifoldModel& m, const Hypersurface& s, const Vec& p);

double mean_curvature(const ManifoldModel& m, const Hypersurface& s, const Vec& p);

/// Ambient divergence of nu: H - sum_beta <[nu, T_beta], T_beta>.
double div_nu(const ManifoldModel& m, const Hypersurface& s, const Vec& p);

/// Surface divergence of nu over a full orthonormal tangent frame.
double div_sigma_nu(const ManifoldModel& m, const Hypersurface& s, const Vec& p);

/// Ric^nabla(nu,nu) = sum_j < R(e_j, nu) nu, e_j > over the horizontal tangent frame.
double ricci_nu_nu(const ManifoldModel& m, const Hypersurface& s, const Vec& p);

/// Everything above in one pass.
CurvatureData curvature_data(const ManifoldModel& m, const Hypersurface& s, const Vec& p);

/// Derivative of the unit horizontal normal along an ambient direction v at p,
/// returned as graded frame components (the connection term is not included).
Vec directional_derivative_nu(const ManifoldModel& m, const Hypersurface& s,
                              const Vec& p, const Vec& v_coord);

/// Matrix C(i,j) = < nabla_{E_i} nu, E_j > over the ambient horizontal frame;
/// curvature quantities are projector contractions of C.
Mat nu_derivative_matrix(const ManifoldModel& m, const Hypersurface& s, const Vec& p);

/// Horizontal-tangent projector in horizontal frame indices: Pi = I - nu nu^T.
Mat horizontal_tangent_projector(const SurfaceFrame& fr, int dim_horizontal);

/// Riemannian area element and perimeter density |N0| * area element at a
/// parameter point of an immersed surface.
struct ImmersionDensities {
    double area_element = 0.0;
    double N0 = 0.0;
    SurfaceFrame frame;
};
ImmersionDensities immersion_densities(const ManifoldModel& m, const Hypersurface& s,
                                       const ImmersionData& im, const Vec& xi);

/// P0 = int |N0| dV_Sigma over an immersed/profile surface, tensor-product
/// Gauss-Legendre with n nodes per dimension (profile surfaces reduce to a
/// 1-D theta rule with the exact 2 pi^2 sphere factor).
MeasureResult perimeter(const ManifoldModel& m, const Hypersurface& s, int n_nodes);
MeasureResult riemannian_area(const ManifoldModel& m, const Hypersurface& s, int n_nodes);

/// Volume of the region bounded by a closed profile surface (direct slab rule).
MeasureResult enclosed_volume(const ManifoldModel& m, const Hypersurface& s, int n_nodes);

/// Volume via the dilation generator: int_Sigma Upsilon = Q^{-1} int <X,N> dV_Sigma.
MeasureResult enclosed_volume_dilation(const ManifoldModel& m, const Hypersurface& s, int n_nodes);

/// Closed-form bubble radial perimeter density per sheet: lambda(r) = W r^3
/// = L r^4 / (2 sqrt(L^2 - r^2)).
double bubble_lambda(double L, double r);

} // namespace srm
