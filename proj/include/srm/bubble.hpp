#pragma once

#include "srm/variation.hpp"

namespace srm {

struct BubbleSpec {
    double L = 1.0;
    int sheet = +1;
    static constexpr double Q = 6.0;
};

/// Every closed form of the H^2 bubble at radius r, evaluated at the canonical
/// point (x1 = r, others 0) where they are radial. These are the golden
/// references for the generic pipeline.
struct BubbleClosedForms {
    double phi;        // profile height
    double W;          // L r / (2 sqrt(L^2-r^2))
    double pbar, qbar; // horizontal normal coefficients at the canonical point
    Mat II0;           // 3x3 in the (J nu, e, J e) frame
    double H;          // 4/L
    double traceII0sq; // 6/L^2 - 2 (L^2-r^2) / (L^2 r^2)
    double a;          // 2 sqrt(L^2-r^2) / (L r)
    double Jnu_a;      // -2 / r^2
    double N0norm;     // L r / sqrt(4 L^2 - 4 r^2 + L^2 r^2)
    double lambda;     // W r^3, radial perimeter density per sheet
};

BubbleClosedForms bubble_closed_forms(double L, double r);

/// Densities of the reduced radial inequality at theta for a trial function h
/// with derivative hp: LHS (h' sin - h cos)^2, RHS 2 h^2.
std::pair<double, double> sv_reduced_integrand(double L, double theta, double h, double hp);

struct FourierCheck {
    std::vector<double> a; // a[m] multiplies cos(m theta) in g = h sin(theta); even m only
    std::vector<double> b; // b[m] multiplies sin(m theta)
    double lhs = 0.0;      // int (h' sin - h cos)^2
    double rhs = 0.0;      // 2 int h^2
    double gap_quadrature = 0.0;
    double gap_coefficient = 0.0;
    double constraint_residual = 0.0; // int h sin^3
    bool admissible = false;
};

/// Fourier-side check of the radial inequality. The input h must be continuous
/// on [0,pi] with square-integrable derivative; the constraint int h sin^3 = 0
/// is evaluated and reported. Coefficients are taken of g = h sin(theta) in the
/// even-frequency basis {1, cos 2k, sin 2k}; the gap formula is the Parseval
/// value of int (g')^2 - 4 g^2:
///   gap = (pi/2) ( -2 a0^2 + sum_k (4k^2-4)(a_k^2 + b_k^2) )
/// The derivative jump of the periodized g is split off onto sin(theta), whose
/// tail sum telescopes in closed form, so the truncated series matches the
/// quadrature value to ~1e-9.
FourierCheck fourier_inequality_check(const std::function<double(double)>& h, int K = 512);

/// Same check for a trial function given by coefficients of g in the
/// even-frequency basis (a[0] is the coefficient of the constant 1/2... stored
/// by frequency: a[2k] multiplies cos(2k theta)). Exact finite sums.
FourierCheck fourier_inequality_check_coeffs(const std::vector<double>& a_freq,
                                             const std::vector<double>& b_freq);

struct ModeProblem {
    int p = 0, q = 0;
    int angular_coefficient = 0; // 2 [p(q+1) + q(p+1)]
    std::vector<double> theta;   // uniform grid, endpoints included
    Mat stiffness;               // A: quadratic form in h
    Mat mass;                    // M: (L^3/2) int h^2 sin^2
    Vec constraint;              // mode (0,0) only: int h sin^3
};

/// Assemble the 1-D piecewise-linear mode problem in the substituted variable
/// h(theta) = rho0^{p,q} sin(theta):
///   A[h] = (L/2) int (h' sin - h cos)^2 + (q-p)^2 h^2 sin^2
///                 + (2[p(q+1)+q(p+1)] - 2) h^2 dtheta
ModeProblem assemble_mode_problem(double L, int p, int q, int n_elements);

/// Minimal eigenvalue of (A, M), restricted to the volume-constraint subspace
/// when `constrained`; also returns the second eigenvalue and the eigenvector.
StabilityMode solve_mode_problem(const ModeProblem& prob, bool constrained);

/// Full bubble stability pipeline over modes p+q <= mode_cutoff.
/// Mode (0,0) is solved under the volume constraint; for p+q >= 1 the angular
/// coefficient is verified to dominate the potential pointwise.
StabilityReport bubble_stability(double L, int radial_resolution, int mode_cutoff);

} // namespace srm
