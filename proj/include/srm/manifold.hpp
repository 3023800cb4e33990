#pragma once

#include "srm/types.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace srm {

/// A vector field given by its coordinate components in the manifold's global chart.
/// The Jacobian (d components / d coordinates) may be supplied in closed form;
/// otherwise central finite differences with step fd_step(p) are used.
struct VectorField {
    std::function<Vec(const Vec&)> value;
    std::function<Mat(const Vec&)> jacobian; // optional

    Vec operator()(const Vec& p) const { return value(p); }
    Mat jac(const Vec& p) const;
};

enum class ConnectionMode { ClosedForm, FiniteDifference };

/// Christoffel data for a connection adapted to the graded frame.
/// gamma(p,i,j,m) = < nabla_{E_m} E_j , E_i > in the graded orthonormal frame
/// (horizontal indices first, then vertical).
struct ConnectionData {
    std::function<double(const Vec&, int, int, int)> gamma;
    ConnectionMode mode = ConnectionMode::ClosedForm;

    static ConnectionData flat();
};

struct DilationData {
    std::vector<double> weights;                     // gamma_beta, one per vertical field
    std::function<Vec(const Vec&, double)> flow;     // (p, lambda) -> D_lambda p
    std::function<Mat(const Vec&, double)> flow_jacobian; // optional
    VectorField generator;                           // X_p = d/dlambda|_0 D_lambda(p)
    double Q = 0.0;                                  // homogeneous dimension k+1+sum(gamma)
};

/// Torsion tensor components at a point against a graded orthonormal frame.
/// Indices: j-bar/i-bar run over horizontal 0..k, greek over vertical 0..l-1.
///   tor(e_a, e_b) = sum_beta 2*C[beta](a,b) T_beta + ...     (a,b horizontal)
///   A[beta](j,i)  = < Tor(e_i, T_beta), e_j >
///   B[j](a,b)     = < Tor(T_a, T_b), e_j > / 2
///   D[beta](j,a)  = < Tor(e_j, T_a), T_beta >
///   E[beta](a,b)  = < Tor(T_a, T_b), T_beta > / 2
struct TorsionComponents {
    std::vector<Mat> C; // per vertical index: (k+1)x(k+1) skew
    std::vector<Mat> A; // per vertical index: (k+1)x(k+1), A[beta](j,i)
    std::vector<Mat> B; // per horizontal index: l x l skew
    std::vector<Mat> D; // per vertical index: (k+1) x l
    std::vector<Mat> E; // per vertical index: l x l skew
};

/// A vertically rigid (or general) sub-Riemannian manifold model on a single
/// global chart. The metric is the one that makes the graded frame orthonormal.
struct ManifoldModel {
    std::string name;
    int dim_total = 0;      // n+1
    int dim_horizontal = 0; // k+1
    int dim_vertical = 0;   // l

    std::vector<VectorField> horizontal_frame; // size k+1
    std::vector<VectorField> vertical_frame;   // size l
    std::vector<int> rigidity_partition;       // class id per vertical index
    bool rigid = false;

    ConnectionData connection;
    std::optional<DilationData> dilation;

    int n() const { return dim_total - 1; }
    int k() const { return dim_horizontal - 1; }
    int l() const { return dim_vertical; }

    /// Graded frame vector by index (horizontal 0..k, then vertical).
    const VectorField& frame(int idx) const {
        return idx < dim_horizontal ? horizontal_frame[idx]
                                    : vertical_frame[idx - dim_horizontal];
    }

    /// Columns are the frame vectors' coordinate components at p.
    Mat frame_matrix(const Vec& p) const;

    /// Frame components of a coordinate vector: solve B(p) c = v.
    Vec frame_components(const Vec& p, const Vec& v_coord) const;

    /// Coordinate components of a frame-component vector.
    Vec coord_of_frame(const Vec& p, const Vec& c) const;

    /// g(u,v) for coordinate vectors u,v at p.
    double metric(const Vec& p, const Vec& u, const Vec& v) const;

    /// Torsion of the adapted connection on a frame pair, as coordinate components.
    Vec torsion_frame_pair(const Vec& p, int a, int b) const;

    /// Torsion on arbitrary coordinate vectors (tensorial extension).
    Vec torsion(const Vec& p, const Vec& u, const Vec& v) const;
};

/// Lie bracket of two fields at p: analytic Jacobians when available, else
/// central finite differences. Antisymmetric by construction.
Vec bracket(const VectorField& X, const VectorField& Y, const Vec& p);
Vec bracket(const ManifoldModel& m, int i, int j, const Vec& p);

/// Lie bracket with an explicit finite-difference step (for convergence studies).
Vec bracket_fd(const VectorField& X, const VectorField& Y, const Vec& p, double h);

ManifoldModel builtin_heisenberg(int n);
ManifoldModel builtin_rototranslation();

/// Torsion components against a user-supplied graded orthonormal frame
/// (columns of `frame`, horizontal block first). Throws if the frame is not
/// orthonormal to `tol`.
TorsionComponents torsion_components(const ManifoldModel& m, const Vec& p,
                                     const Mat& frame, double tol = 1e-8);

/// Frame components of the curvature tensor at p:
/// R[d][c](a,b) = < R(E_a,E_b) E_c , E_d >  with
/// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_{[X,Y]} Z.
/// Christoffel derivatives by central differences along frame directions.
std::vector<std::vector<Mat>> curvature_frame_components(const ManifoldModel& m, const Vec& p);

/// Numeric checks of the model invariants at a sample point; each returns the
/// largest residual found.
double check_frame_orthonormal(const ManifoldModel& m, const Vec& p);
double check_rigidity(const ManifoldModel& m, const Vec& p);
double check_vertical_parallel(const ManifoldModel& m, const Vec& p);
double check_horizontal_torsion_vertical(const ManifoldModel& m, const Vec& p);
double check_metric_compatibility(const ManifoldModel& m, const Vec& p);

/// Heisenberg complex structure on horizontal components: J X_j = -Y_j, J Y_j = X_j.
/// Input/output are horizontal frame component vectors of size 2n.
Vec heisenberg_J(const Vec& horizontal_components);

} // namespace srm
