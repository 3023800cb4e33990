#pragma once

#include "srm/types.hpp"

#include <cmath>
#include <vector>

namespace srm {

struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre rule on [a,b]. Nodes by Newton iteration on Legendre polynomials.
QuadRule gauss_legendre(int n, double a, double b);

/// Composite n-point trapezoid rule for periodic integrands on [a,b).
QuadRule periodic_trapezoid(int n, double a, double b);

/// Integrate f over [a,b] with an n-point Gauss-Legendre rule.
double integrate_gl(const std::function<double(double)>& f, double a, double b, int n);

/// Unit S^3 product rule: z1 = cos(alpha) e^{i beta}, z2 = sin(alpha) e^{i gamma},
/// measure cos(alpha) sin(alpha) dalpha dbeta dgamma, total mass 2*pi^2.
/// Returns points on the unit sphere in R^4 (x1,y1,x2,y2) with weights.
struct S3Rule {
    std::vector<Eigen::Vector4d> points;
    std::vector<double> weights;
};
S3Rule s3_rule(int n_alpha, int n_angle);

} // namespace srm
