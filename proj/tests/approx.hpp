#pragma once

#include <complex>
#include <sstream>
#include <string>

#include <doctest.h>

namespace testutil {

using Complex = std::complex<double>;

// |got - want| <= rtol * max(|want|, floor) with a readable failure message.
inline void check_close(Complex got, Complex want, double rtol, double floor = 0.0) {
    double scale = std::max(std::abs(want), floor);
    double err = std::abs(got - want);
    std::ostringstream os;
    os << "got (" << got.real() << ", " << got.imag() << ") want (" << want.real()
       << ", " << want.imag() << ") err " << err << " allowed " << rtol * scale;
    INFO(os.str());
    CHECK(err <= rtol * scale);
}

inline void check_close(double got, double want, double rtol, double floor = 0.0) {
    check_close(Complex{got, 0.0}, Complex{want, 0.0}, rtol, floor);
}

}  // namespace testutil
