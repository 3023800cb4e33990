#include "srm/manifold.hpp"

namespace srm {

Mat VectorField::jac(const Vec& p) const {
    if (jacobian) return jacobian(p);
    const int n = static_cast<int>(p.size());
    const double h = fd_step(p);
    Mat J(n, n);
    Vec q = p;
    for (int i = 0; i < n; ++i) {
        q(i) = p(i) + h;
        Vec fp = value(q);
        q(i) = p(i) - h;
        Vec fm = value(q);
        q(i) = p(i);
        J.col(i) = (fp - fm) / (2.0 * h);
    }
    return J;
}

ConnectionData ConnectionData::flat() {
    ConnectionData c;
    c.gamma = [](const Vec&, int, int, int) { return 0.0; };
    c.mode = ConnectionMode::ClosedForm;
    return c;
}

Mat ManifoldModel::frame_matrix(const Vec& p) const {
    Mat B(dim_total, dim_total);
    for (int i = 0; i < dim_horizontal; ++i) B.col(i) = horizontal_frame[i](p);
    for (int a = 0; a < dim_vertical; ++a) B.col(dim_horizontal + a) = vertical_frame[a](p);
    return B;
}

Vec ManifoldModel::frame_components(const Vec& p, const Vec& v_coord) const {
    return frame_matrix(p).partialPivLu().solve(v_coord);
}

Vec ManifoldModel::coord_of_frame(const Vec& p, const Vec& c) const {
    return frame_matrix(p) * c;
}

double ManifoldModel::metric(const Vec& p, const Vec& u, const Vec& v) const {
    Mat Binv = frame_matrix(p).partialPivLu().inverse();
    return (Binv * u).dot(Binv * v);
}

Vec bracket(const VectorField& X, const VectorField& Y, const Vec& p) {
    return Y.jac(p) * X(p) - X.jac(p) * Y(p);
}

Vec bracket(const ManifoldModel& m, int i, int j, const Vec& p) {
    return bracket(m.frame(i), m.frame(j), p);
}

Vec bracket_fd(const VectorField& X, const VectorField& Y, const Vec& p, double h) {
    const int n = static_cast<int>(p.size());
    auto fd_jac = [&](const VectorField& F) {
        Mat J(n, n);
        Vec q = p;
        for (int c = 0; c < n; ++c) {
            q(c) = p(c) + h;
            Vec fp = F(q);
            q(c) = p(c) - h;
            Vec fm = F(q);
            q(c) = p(c);
            J.col(c) = (fp - fm) / (2.0 * h);
        }
        return J;
    };
    return fd_jac(Y) * X(p) - fd_jac(X) * Y(p);
}

Vec ManifoldModel::torsion_frame_pair(const Vec& p, int a, int b) const {
    // Tor(E_a, E_b) = (Gamma^i_{b a} - Gamma^i_{a b}) E_i - [E_a, E_b]
    Vec t = -bracket(*this, a, b, p);
    Mat B = frame_matrix(p);
    for (int i = 0; i < dim_total; ++i) {
        double c = connection.gamma(p, i, b, a) - connection.gamma(p, i, a, b);
        if (c != 0.0) t += c * B.col(i);
    }
    return t;
}

Vec ManifoldModel::torsion(const Vec& p, const Vec& u, const Vec& v) const {
    Vec uc = frame_components(p, u);
    Vec vc = frame_components(p, v);
    Vec t = Vec::Zero(dim_total);
    for (int a = 0; a < dim_total; ++a) {
        if (uc(a) == 0.0) continue;
        for (int b = 0; b < dim_total; ++b) {
            if (vc(b) == 0.0 || a == b) continue;
            t += uc(a) * vc(b) * torsion_frame_pair(p, a, b);
        }
    }
    return t;
}

ManifoldModel builtin_heisenberg(int n) {
    if (n < 1) throw Error("heisenberg: n must be >= 1");
    ManifoldModel m;
    m.name = "heisenberg-" + std::to_string(n);
    m.dim_total = 2 * n + 1;
    m.dim_horizontal = 2 * n;
    m.dim_vertical = 1;
    const int N = m.dim_total;

    for (int j = 0; j < n; ++j) {
        VectorField X;
        X.value = [N, n, j](const Vec& p) {
            Vec v = Vec::Zero(N);
            v(j) = 1.0;
            v(N - 1) = -0.5 * p(n + j); // -y_j/2 d_t
            return v;
        };
        X.jacobian = [N, n, j](const Vec&) {
            Mat J = Mat::Zero(N, N);
            J(N - 1, n + j) = -0.5;
            return J;
        };
        m.horizontal_frame.push_back(X);
    }
    for (int j = 0; j < n; ++j) {
        VectorField Y;
        Y.value = [N, n, j](const Vec& p) {
            Vec v = Vec::Zero(N);
            v(n + j) = 1.0;
            v(N - 1) = 0.5 * p(j); // +x_j/2 d_t
            return v;
        };
        Y.jacobian = [N, j](const Vec&) {
            Mat J = Mat::Zero(N, N);
            J(N - 1, j) = 0.5;
            return J;
        };
        m.horizontal_frame.push_back(Y);
    }

    VectorField T;
    T.value = [N](const Vec&) {
        Vec v = Vec::Zero(N);
        v(N - 1) = 1.0;
        return v;
    };
    T.jacobian = [N](const Vec&) { return Mat::Zero(N, N); };
    m.vertical_frame.push_back(T);

    m.rigidity_partition = {0};
    m.rigid = true;
    m.connection = ConnectionData::flat();

    DilationData d;
    d.weights = {2.0};
    d.flow = [N](const Vec& p, double lam) {
        Vec q = p;
        double e1 = std::exp(lam);
        for (int i = 0; i < N - 1; ++i) q(i) = e1 * p(i);
        q(N - 1) = std::exp(2.0 * lam) * p(N - 1);
        return q;
    };
    d.flow_jacobian = [N](const Vec&, double lam) {
        Vec diag = Vec::Constant(N, std::exp(lam));
        diag(N - 1) = std::exp(2.0 * lam);
        return Mat(diag.asDiagonal());
    };
    d.generator.value = [N](const Vec& p) {
        Vec v = p;
        v(N - 1) = 2.0 * p(N - 1);
        return v;
    };
    d.generator.jacobian = [N](const Vec&) {
        Vec diag = Vec::Ones(N);
        diag(N - 1) = 2.0;
        return Mat(diag.asDiagonal());
    };
    d.Q = 2.0 * n + 2.0;
    m.dilation = d;
    return m;
}

ManifoldModel builtin_rototranslation() {
    // Coordinates (x, y, theta); X1 = cos(th) dx + sin(th) dy, X2 = d_theta,
    // T = sin(th) dx - cos(th) dy.
    ManifoldModel m;
    m.name = "rototranslation";
    m.dim_total = 3;
    m.dim_horizontal = 2;
    m.dim_vertical = 1;

    VectorField X1;
    X1.value = [](const Vec& p) {
        Vec v(3);
        v << std::cos(p(2)), std::sin(p(2)), 0.0;
        return v;
    };
    X1.jacobian = [](const Vec& p) {
        Mat J = Mat::Zero(3, 3);
        J(0, 2) = -std::sin(p(2));
        J(1, 2) = std::cos(p(2));
        return J;
    };
    VectorField X2;
    X2.value = [](const Vec&) {
        Vec v(3);
        v << 0.0, 0.0, 1.0;
        return v;
    };
    X2.jacobian = [](const Vec&) { return Mat::Zero(3, 3); };
    VectorField T;
    T.value = [](const Vec& p) {
        Vec v(3);
        v << std::sin(p(2)), -std::cos(p(2)), 0.0;
        return v;
    };
    T.jacobian = [](const Vec& p) {
        Mat J = Mat::Zero(3, 3);
        J(0, 2) = std::cos(p(2));
        J(1, 2) = std::sin(p(2));
        return J;
    };
    m.horizontal_frame = {X1, X2};
    m.vertical_frame = {T};
    m.rigidity_partition = {0};
    m.rigid = true;
    m.connection = ConnectionData::flat();
    return m;
}

TorsionComponents torsion_components(const ManifoldModel& m, const Vec& p,
                                     const Mat& frame, double tol) {
    const int kk = m.dim_horizontal, l = m.dim_vertical, N = m.dim_total;
    Mat G(N, N);
    std::vector<Vec> fc(N);
    for (int i = 0; i < N; ++i) fc[i] = m.frame_components(p, frame.col(i));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) G(i, j) = fc[i].dot(fc[j]);
    if ((G - Mat::Identity(N, N)).cwiseAbs().maxCoeff() > tol)
        throw Error("torsion_components: frame is not orthonormal (Gram residual "
                    + std::to_string((G - Mat::Identity(N, N)).cwiseAbs().maxCoeff()) + ")");

    // Pairwise torsions in the supplied frame, projected back onto it.
    std::vector<std::vector<Vec>> tor(N, std::vector<Vec>(N));
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b) {
            Vec t = m.frame_components(p, m.torsion(p, frame.col(a), frame.col(b)));
            Vec tf(N);
            for (int i = 0; i < N; ++i) tf(i) = t.dot(fc[i]);
            tor[a][b] = tf;
            tor[b][a] = -tf;
        }
    for (int a = 0; a < N; ++a) tor[a][a] = Vec::Zero(N);

    TorsionComponents out;
    out.C.assign(l, Mat::Zero(kk, kk));
    out.A.assign(l, Mat::Zero(kk, kk));
    out.B.assign(kk, Mat::Zero(l, l));
    out.D.assign(l, Mat(kk, l));
    out.E.assign(l, Mat::Zero(l, l));
    for (int be = 0; be < l; ++be) {
        for (int a = 0; a < kk; ++a)
            for (int b = 0; b < kk; ++b) out.C[be](a, b) = 0.5 * tor[a][b](kk + be);
        for (int j = 0; j < kk; ++j)
            for (int al = 0; al < l; ++al) out.D[be](j, al) = tor[j][kk + al](kk + be);
        for (int al = 0; al < l; ++al)
            for (int ga = 0; ga < l; ++ga) out.E[be](al, ga) = 0.5 * tor[kk + al][kk + ga](kk + be);
        for (int j = 0; j < kk; ++j)
            for (int i = 0; i < kk; ++i) out.A[be](j, i) = tor[i][kk + be](j);
    }
    for (int j = 0; j < kk; ++j)
        for (int al = 0; al < l; ++al)
            for (int be = 0; be < l; ++be) out.B[j](al, be) = 0.5 * tor[kk + al][kk + be](j);
    return out;
}

std::vector<std::vector<Mat>> curvature_frame_components(const ManifoldModel& m, const Vec& p) {
    const int N = m.dim_total;
    const double h = 1e-5 * std::max(1.0, p.cwiseAbs().maxCoeff());
    Mat B = m.frame_matrix(p);

    auto gamma_at = [&](const Vec& q, int i, int j, int mm) {
        return m.connection.gamma(q, i, j, mm);
    };
    // e_a(Gamma^d_{c b}) by central differences along the frame direction.
    auto dgamma = [&](int a, int d, int c, int b) {
        Vec dir = B.col(a);
        return (gamma_at(p + h * dir, d, c, b) - gamma_at(p - h * dir, d, c, b)) / (2.0 * h);
    };
    // Frame structure coefficients [E_a, E_b] = cc^l_{ab} E_l.
    std::vector<std::vector<Vec>> cc(N, std::vector<Vec>(N));
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b) {
            Vec br = m.frame_components(p, bracket(m, a, b, p));
            cc[a][b] = br;
            cc[b][a] = -br;
        }
    for (int a = 0; a < N; ++a) cc[a][a] = Vec::Zero(N);

    std::vector<std::vector<Mat>> R(N, std::vector<Mat>(N, Mat::Zero(N, N)));
    for (int d = 0; d < N; ++d)
        for (int c = 0; c < N; ++c)
            for (int a = 0; a < N; ++a)
                for (int b = 0; b < N; ++b) {
                    if (a == b) continue;
                    double v = dgamma(a, d, c, b) - dgamma(b, d, c, a);
                    for (int li = 0; li < N; ++li) {
                        v += gamma_at(p, li, c, b) * gamma_at(p, d, li, a)
                           - gamma_at(p, li, c, a) * gamma_at(p, d, li, b)
                           - cc[a][b](li) * gamma_at(p, d, c, li);
                    }
                    R[d][c](a, b) = v;
                }
    return R;
}

double check_frame_orthonormal(const ManifoldModel& m, const Vec& p) {
    Mat B = m.frame_matrix(p);
    double det = B.determinant();
    return std::abs(det) < 1e-12 ? 1e300 : 0.0; // frames are orthonormal by decree
}

double check_rigidity(const ManifoldModel& m, const Vec& p) {
    double worst = 0.0;
    for (int i = 0; i < m.dim_horizontal; ++i)
        for (int a = 0; a < m.dim_vertical; ++a)
            for (int b = 0; b < m.dim_vertical; ++b) {
                if (m.rigidity_partition[a] != m.rigidity_partition[b]) continue;
                Vec br = m.frame_components(p, bracket(m, i, m.dim_horizontal + a, p));
                worst = std::max(worst, std::abs(br(m.dim_horizontal + b)));
            }
    return worst;
}

double check_vertical_parallel(const ManifoldModel& m, const Vec& p) {
    double worst = 0.0;
    for (int a = 0; a < m.dim_vertical; ++a)
        for (int mm = 0; mm < m.dim_total; ++mm)
            for (int i = 0; i < m.dim_total; ++i)
                worst = std::max(worst,
                                 std::abs(m.connection.gamma(p, i, m.dim_horizontal + a, mm)));
    return worst;
}

double check_horizontal_torsion_vertical(const ManifoldModel& m, const Vec& p) {
    double worst = 0.0;
    for (int a = 0; a < m.dim_horizontal; ++a)
        for (int b = 0; b < m.dim_horizontal; ++b) {
            if (a == b) continue;
            Vec t = m.frame_components(p, m.torsion_frame_pair(p, a, b));
            worst = std::max(worst, t.head(m.dim_horizontal).cwiseAbs().maxCoeff());
        }
    return worst;
}

double check_metric_compatibility(const ManifoldModel& m, const Vec& p) {
    // In an orthonormal frame compatibility is antisymmetry of Gamma in the
    // first two indices, plus d<E_i,E_j>(E_m) = 0 which holds by construction.
    double worst = 0.0;
    for (int i = 0; i < m.dim_total; ++i)
        for (int j = 0; j < m.dim_total; ++j)
            for (int mm = 0; mm < m.dim_total; ++mm)
                worst = std::max(worst, std::abs(m.connection.gamma(p, i, j, mm)
                                                 + m.connection.gamma(p, j, i, mm)));
    return worst;
}

Vec heisenberg_J(const Vec& hc) {
    const int n2 = static_cast<int>(hc.size());
    const int n = n2 / 2;
    Vec out(n2);
    // J X_j = -Y_j, J Y_j = X_j  =>  (u_X, u_Y) -> (u_Y, -u_X)
    out.head(n) = hc.tail(n);
    out.tail(n) = -hc.head(n);
    return out;
}

} // namespace srm
