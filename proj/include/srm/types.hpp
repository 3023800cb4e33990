#pragma once

#include <Eigen/Dense>
#include <functional>
#include <stdexcept>
#include <string>

namespace srm {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotOnSurfaceError : Error {
    using Error::Error;
};

struct CharacteristicPointError : Error {
    using Error::Error;
};

struct NonRigidError : Error {
    using Error::Error;
};

struct QuadratureError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, int line, int column)
        : Error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line(line), column(column) {}
    int line;
    int column;
};

inline double sq(double x) { return x * x; }

/// Central-difference step for first derivatives of a field near p.
inline double fd_step(const Vec& p) {
    const double eps = std::numeric_limits<double>::epsilon();
    double scale = std::max(1.0, p.size() ? p.cwiseAbs().maxCoeff() : 1.0);
    return std::cbrt(eps) * scale;
}

} // namespace srm
