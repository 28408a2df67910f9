#include "dsholo/geometry.hpp"

#include <cmath>
#include <numeric>

#include "dsholo/defaults.hpp"
#include "dsholo/errors.hpp"

namespace dsholo {

namespace {

constexpr double kHalfPi = 1.5707963267948966;

void check_unit(const std::vector<double>& u, const char* what) {
    double n2 = std::inner_product(u.begin(), u.end(), u.begin(), 0.0);
    if (std::abs(n2 - 1.0) > 2e-12)
        throw InvalidParameter(std::string(what) + ": direction must be unit within 1e-12");
}

}  // namespace

PrincipalParams::PrincipalParams(int d_, double nu_, double R_) : d(d_), nu(nu_), R(R_) {
    if (d < 3) throw InvalidParameter("PrincipalParams: requires d >= 3");
    if (R <= 0.0) throw InvalidParameter("PrincipalParams: requires R > 0");
    if (std::abs(nu) < defaults::nu_min)
        throw InvalidParameter(
            "PrincipalParams: |nu| below gate; the regularization factor "
            "1/Gamma(-2 i nu) hits the Gamma pole at nu = 0");
}

Complex PrincipalParams::tau() const {
    return {-0.5 * static_cast<double>(d - 1), -nu};
}

BulkPoint::BulkPoint(double rho_, double epsilon_, std::vector<double> u_)
    : rho(rho_), epsilon(epsilon_), u(std::move(u_)) {
    if (std::abs(rho) >= kHalfPi)
        throw InvalidParameter("BulkPoint: requires |rho| < pi/2");
    if (epsilon < 0.0) throw InvalidParameter("BulkPoint: requires epsilon >= 0");
    check_unit(u, "BulkPoint");
}

NullDirection::NullDirection(double xi0_, std::vector<double> v_) : xi0(xi0_), v(std::move(v_)) {
    if (xi0 <= 0.0) throw InvalidParameter("NullDirection: requires xi0 > 0");
    check_unit(v, "NullDirection");
}

BoundaryPoint::BoundaryPoint(std::vector<double> u_) : u(std::move(u_)) {
    check_unit(u, "BoundaryPoint");
}

std::vector<Complex> embed(const BulkPoint& p, const PrincipalParams& params) {
    if (static_cast<int>(p.u.size()) != params.d)
        throw InvalidParameter("embed: point dimension mismatch");
    Complex rt{p.rho, -p.epsilon};
    std::vector<Complex> x(params.d + 1);
    x[0] = params.R * std::tan(rt);
    Complex sec = params.R / std::cos(rt);
    for (int i = 0; i < params.d; ++i) x[i + 1] = sec * p.u[i];
    return x;
}

Complex conformal_dot(const BulkPoint& p, const NullDirection& xi,
                      const PrincipalParams& /*params: x.xi/R is R-independent*/) {
    if (p.u.size() != xi.v.size())
        throw InvalidParameter("conformal_dot: dimension mismatch");
    Complex rt{p.rho, -p.epsilon};
    Complex r = Complex{0.0, 1.0} * std::exp(Complex{0.0, -1.0} * rt);
    double uv = std::inner_product(p.u.begin(), p.u.end(), xi.v.begin(), 0.0);
    Complex front = xi.xi0 * std::exp(Complex{0.0, 1.0} * rt) / (Complex{0.0, 2.0} * std::cos(rt));
    return front * (1.0 + r * r - 2.0 * r * uv);
}

double casimir_eigenvalue(const PrincipalParams& params) {
    double half = 0.5 * static_cast<double>(params.d - 1);
    return half * half + params.nu * params.nu;
}

}  // namespace dsholo
