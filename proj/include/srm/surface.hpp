#pragma once

#include "srm/manifold.hpp"

#include <array>
#include <map>
#include <optional>

namespace srm {

/// Level-set data: phi with coordinate gradient and (optional) Hessian.
struct LevelSetData {
    std::function<double(const Vec&)> phi;
    std::function<Vec(const Vec&)> grad;    // optional; FD fallback
    std::function<Mat(const Vec&)> hess;    // optional; enables analytic nu-derivatives

    double value(const Vec& p) const { return phi(p); }
    Vec gradient(const Vec& p) const;
    Mat hessian(const Vec& p) const;
    bool has_hessian() const { return static_cast<bool>(hess); }
};

/// Parametrized immersion F: box in R^n -> M.
struct ImmersionData {
    std::function<Vec(const Vec&)> F;
    std::function<Mat(const Vec&)> jacobian; // optional; FD fallback
    Vec lo, hi;                              // parameter box
    bool flip_orientation = false;

    Mat jac(const Vec& xi) const;
};

/// Rotationally invariant double graph t = +-phi(r) in a Heisenberg group.
struct ProfileData {
    double L = 1.0;
    int heisenberg_n = 2;
    double phi(double r) const;
    double dphi(double r) const;
    // Global smooth parametrization over theta in [0,pi]: r = L sin(theta),
    // t = L^2 (pi/8 - theta/4 + sin(2 theta)/8).
    double t_of_theta(double theta) const;
    double dt_dtheta(double theta) const;
};

enum class SurfaceKind { LevelSet, RotationalProfile, ParamImmersion };

struct Hypersurface {
    SurfaceKind kind = SurfaceKind::LevelSet;
    std::optional<LevelSetData> level_set;
    std::optional<ImmersionData> immersion;
    std::optional<ProfileData> profile;
    std::string name;
    double on_surface_tol = 1e-7;
};

/// Per-point frame package on a hypersurface.
struct SurfaceFrame {
    Vec p;
    Vec N_frame;       // Riemannian unit normal, graded frame components
    double N0_norm = 0.0;
    bool characteristic = false;

    // Defined only off the characteristic set:
    Vec nu_frame;          // unit horizontal normal, frame components (size n+1, vertical part 0)
    Vec nu_coord;          // same, coordinate components
    Vec a;                 // vertical coefficients: N = |N0| (nu + a_beta T_beta)
    std::vector<Vec> e_frame; // horizontal tangent frame, frame components
    std::vector<Vec> e_coord;
    Vec nu_top_frame;      // tangential part of nu: nu - |N0| N

    Vec N_coord;
};

struct CharScanResult {
    struct Cell {
        std::array<long, 8> index{}; // ambient integer box coords (first dim_total used)
        double size = 0.0;
    };
    std::vector<Cell> cells;      // detected boxes at the finest resolution
    std::vector<long> counts;     // ambient box counts per refinement level
    std::vector<double> sizes;    // box sizes per level
    double min_N0 = 0.0;
    double dimension_estimate = 0.0;
    std::vector<double> per_step_estimates;
};

/// Build the per-point frame package. For rotational-profile surfaces in H^2 the
/// explicit frame (J nu, e, J e) is used; otherwise projected Gram-Schmidt over
/// the ambient horizontal frame (smallest projection dropped, index order kept).
/// At characteristic points (|N0| < threshold) N and |N0| are still filled in and
/// `characteristic` is set; nu, a and the tangent frame are left empty.
SurfaceFrame surface_frame(const ManifoldModel& m, const Hypersurface& s, const Vec& p,
                           double char_threshold = 1e-8);

bool is_characteristic(const ManifoldModel& m, const Hypersurface& s, const Vec& p,
                       double threshold = 1e-8);

/// Scan a parametrized/profile surface for characteristic cells. Detection uses
/// the cell-size-scaled threshold c*h on |N0| (c = 2); counts are taken over
/// ambient boxes so degenerate parametrizations (poles) are not over-counted.
/// The box-counting estimate averages log2(N_{h/2}/N_h) over two refinements.
CharScanResult characteristic_scan(const ManifoldModel& m, const Hypersurface& s,
                                   int grid_resolution, double c_threshold = 2.0);

/// Surface constructors used by tests and the CLI.
Hypersurface make_level_set_surface(std::function<double(const Vec&)> phi,
                                    std::function<Vec(const Vec&)> grad = nullptr,
                                    std::function<Mat(const Vec&)> hess = nullptr,
                                    std::string name = "level-set");

/// Graph t = f(x) over the horizontal coordinates of a Heisenberg group (the
/// last coordinate is t). Provides both level-set and immersion data.
Hypersurface make_heisenberg_graph(int n, std::function<double(const Vec&)> f,
                                   std::function<Vec(const Vec&)> df,
                                   std::function<Mat(const Vec&)> d2f,
                                   const Vec& lo, const Vec& hi,
                                   std::string name = "graph");

/// Bubble set in H^n (n = 1, 2): profile + upper-sheet level set + global immersion.
Hypersurface make_bubble(double L, int heisenberg_n = 2);

/// Point on the bubble at radius r (canonical S^3/S^1 position), upper sheet.
Vec bubble_point(const ProfileData& prof, double r, int sheet = +1);

/// Vertical plane {x1 = 0} in H^1.
Hypersurface make_vertical_plane_h1();

/// Plane {y = 0} in the rototranslation space (minimal away from sin(theta)=0).
Hypersurface make_roto_plane();

} // namespace srm
