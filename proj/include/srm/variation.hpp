#pragma once

#include "srm/geom.hpp"

namespace srm {

enum class VariationSupport { AwayFromChar, OverChar };

/// Scalar variation data. `rho` is the Riemannian variation function, defined
/// on (a neighbourhood of) the surface in ambient coordinates; `rho0` the
/// horizontal one. Either may be empty, in which case it is derived from the
/// other through |N0|.
struct VariationField {
    std::function<double(const Vec&)> rho;
    std::function<double(const Vec&)> rho0;
    VariationSupport support = VariationSupport::AwayFromChar;

    double rho_at(const ManifoldModel& m, const Hypersurface& s, const Vec& p) const;
    double rho0_at(const ManifoldModel& m, const Hypersurface& s, const Vec& p) const;
};

struct StabilityMode {
    std::string id;          // "(p,q)", "radial" or "grid"
    double min_eigenvalue = 0.0;
    double second_eigenvalue = 0.0;
    double constraint_residual = 0.0;
    std::vector<double> eigenvector; // nodal values of the minimizer
    std::vector<double> nodes;
    bool constrained = false;
};

struct StabilityReport {
    std::vector<StabilityMode> modes;
    bool stable = false;
    int discretization = 0;
    double threshold = -1e-6;
};

struct FirstVariationResult {
    double value = 0.0;          // Thm-form integral actually reported
    double value_div_form = 0.0; // rho div(nu) - div_Sigma(rho nu^T) route
    double mismatch = 0.0;
};

/// First variation of P0. Away from the characteristic set both displayed
/// forms are computed and cross-checked; over-char support uses the
/// divergence form only. `n_nodes` is the per-dimension quadrature size.
FirstVariationResult first_variation(const ManifoldModel& m, const Hypersurface& s,
                                     const VariationField& v, int n_nodes,
                                     double cross_check_tol = 1e-3);

/// Boundary integrals over the shrinking collars around the characteristic
/// set, one value per delta. The in-surface unit normal points toward C(Sigma).
std::vector<double> boundary_limit_term(const ManifoldModel& m, const Hypersurface& s,
                                        const VariationField& v,
                                        const std::vector<double>& deltas, int n_nodes);

/// Potential density S(p) of the second variation quadratic form
/// (the rho0^2 coefficient):
///   -Ric(nu,nu) - Tr(II0^2)
///   - <Tor(nu,e_j),T_b><Tor(e_j,T_b),nu> - <Tor(e_j,T_b),N_v><Tor(nu,e_j),T_b>
///   - div0(V) - <Tor(nu,e_j),T_b> e_j(a_b) - <Tor(nu,e_j),N_v>^2
/// with N_v = a_b T_b and V the horizontal tangent dual of u -> <Tor(nu,u),N_v>.
double second_variation_density(const ManifoldModel& m, const Hypersurface& s, const Vec& p);

/// Specialized closed-form densities (for consistency checks):
/// Heisenberg: -Tr(II0^2) - 2 (J nu) a - n a^2.
double heisenberg_sv_density(const ManifoldModel& m, const Hypersurface& s, const Vec& p);
/// Rototranslation: -Tr(II0^2) - pbar^2 - 2 e_1(a) - a^2.
double roto_sv_density(const ManifoldModel& m, const Hypersurface& s, const Vec& p);

/// Assembled second variation for a given variation field. Requires a rigid
/// model and either H = 0 on the support or int rho0 Lambda = 0.
double second_variation(const ManifoldModel& m, const Hypersurface& s,
                        const VariationField& v, int n_nodes);

/// Straight-line normal flow family F_t = p + t rho(p) N(p) used by the
/// finite-difference oracles.
struct NormalFlowFamily {
    const ManifoldModel* m = nullptr;
    Hypersurface base;
    std::function<double(const Vec&)> rho;

    Vec point(const Vec& xi, double t) const;
    double perimeter_at(double t, int n_nodes) const;
};

/// d/dt P0 at t = 0 by a centered difference.
double first_variation_fd_oracle(const NormalFlowFamily& fam, int n_nodes, double h_t = 1e-4);

/// d^2/dt^2 P0 at t = 0 by a five-point stencil.
double second_variation_fd_oracle(const NormalFlowFamily& fam, int n_nodes, double h_t = 1e-2);

/// Stability spectrum: rotational surfaces dispatch to the bubble mode solver;
/// otherwise a Dirichlet tensor-grid form on the immersion parameter box.
StabilityReport stability_spectrum(const ManifoldModel& m, const Hypersurface& s,
                                   int discretization, int mode_cutoff = 6);

struct MinkowskiReport {
    double P0 = 0.0;
    double H = 0.0;
    double Q = 0.0;
    double volume = 0.0;           // direct slab quadrature (closed surfaces)
    double volume_dilation = 0.0;  // Q^{-1} int <X,N> dV_Sigma route
    double boundary_term = 0.0;    // contour integral of X -| Lambda (patches)
    double residual = 0.0;         // (Q-1) P0 - Q H int(Upsilon) - boundary
    double residual_rel = 0.0;
    double cor_residual_rel = 0.0; // |(Q-1) P0 - Q H Vol| / ((Q-1) P0), closed case
};

/// Minkowski-identity check. For closed profile surfaces both volume routes are
/// computed; for patches (theta range) the boundary term is included.
MinkowskiReport minkowski_check(const ManifoldModel& m, const Hypersurface& s, int n_nodes,
                                double theta_min = 0.0, double theta_max = 0.0);

} // namespace srm
