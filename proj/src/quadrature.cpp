#include "srm/quadrature.hpp"

namespace srm {

QuadRule gauss_legendre(int n, double a, double b) {
    QuadRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        // Newton from the Chebyshev-like initial guess.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.nodes[i] = mid - half * x;
        r.weights[i] = 2.0 * half / ((1.0 - x * x) * pp * pp);
    }
    return r;
}

QuadRule periodic_trapezoid(int n, double a, double b) {
    QuadRule r;
    r.nodes.resize(n);
    r.weights.assign(n, (b - a) / n);
    for (int i = 0; i < n; ++i) r.nodes[i] = a + (b - a) * i / n;
    return r;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b, int n) {
    QuadRule r = gauss_legendre(n, a, b);
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += r.weights[i] * f(r.nodes[i]);
    return s;
}

S3Rule s3_rule(int n_alpha, int n_angle) {
    S3Rule out;
    QuadRule ra = gauss_legendre(n_alpha, 0.0, M_PI / 2.0);
    QuadRule rb = periodic_trapezoid(n_angle, 0.0, 2.0 * M_PI);
    out.points.reserve(static_cast<size_t>(n_alpha) * n_angle * n_angle);
    out.weights.reserve(out.points.capacity());
    for (int ia = 0; ia < n_alpha; ++ia) {
        double al = ra.nodes[ia];
        double wa = ra.weights[ia] * std::cos(al) * std::sin(al);
        for (int ib = 0; ib < n_angle; ++ib) {
            for (int ic = 0; ic < n_angle; ++ic) {
                double be = rb.nodes[ib], ga = rb.nodes[ic];
                Eigen::Vector4d p;
                p << std::cos(al) * std::cos(be), std::cos(al) * std::sin(be),
                     std::sin(al) * std::cos(ga), std::sin(al) * std::sin(ga);
                out.points.push_back(p);
                out.weights.push_back(wa * rb.weights[ib] * rb.weights[ic]);
            }
        }
    }
    return out;
}

} // namespace srm
