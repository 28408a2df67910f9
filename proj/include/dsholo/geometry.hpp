#pragma once

#include <complex>
#include <vector>

#include "dsholo/gamma.hpp"

namespace dsholo {

// Principal-series parameter pack for dS_d: dimension d >= 3, curvature
// radius R, spectral parameter nu with |nu| >= defaults::nu_min, and
// tau = -(d-1)/2 - i nu.
struct PrincipalParams {
    int d;
    double nu;
    double R = 1.0;

    PrincipalParams(int d_, double nu_, double R_ = 1.0);
    Complex tau() const;
};

// Point of the conformal chart: x = (R tan(rho - i eps), R u / cos(rho - i eps))
// with |rho| < pi/2, unit u in R^d, and eps >= 0 the imaginary shift that
// selects the backward-tube prescription.
struct BulkPoint {
    double rho;
    double epsilon;
    std::vector<double> u;

    BulkPoint(double rho_, double epsilon_, std::vector<double> u_);
};

// Future null-cone direction xi = (xi0, xi0 v), xi0 > 0, unit v.
struct NullDirection {
    double xi0;
    std::vector<double> v;

    NullDirection(double xi0_, std::vector<double> v_);
};

// Point of the boundary sphere S^(d-1).
struct BoundaryPoint {
    std::vector<double> u;

    explicit BoundaryPoint(std::vector<double> u_);
};

// Complexified embedding-space coordinates of a chart point, length d+1,
// signature (+, -, ..., -), so the hyperboloid constraint reads x.x = -R^2.
std::vector<Complex> embed(const BulkPoint& p, const PrincipalParams& params);

// x . xi / R in closed conformal-chart form:
//   [xi0 e^(i rt) / (2 i cos rt)] (1 + r^2 - 2 r (u.v)),  rt = rho - i eps,
//   r = i e^(-i rt).
// Agrees with the Minkowski dot product of embed(p) with xi.
Complex conformal_dot(const BulkPoint& p, const NullDirection& xi, const PrincipalParams& params);

// Quadratic Casimir eigenvalue ((d-1)/2)^2 + nu^2 = -tau (tau + d - 1).
double casimir_eigenvalue(const PrincipalParams& params);

}  // namespace dsholo
