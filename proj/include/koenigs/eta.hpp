#pragma once

#include <complex>

namespace koenigs {

using cplx = std::complex<double>;

/// eta(w) = w - (log(w+3))^a on the right half-plane, principal branches.
/// Its image of the imaginary axis t -> eta(it) is the boundary of the eta-domain.
struct EtaMap {
    double a = 1;

    cplx eta(cplx w) const;
    cplx deta(cplx w) const;
    double re_curve(double t) const { return eta(cplx(0, t)).real(); }
    double im_curve(double t) const { return eta(cplx(0, t)).imag(); }
    /// t with im_curve(t) == y; im_curve is strictly increasing.
    double invert(double y) const;
    /// Defining function of eta(C_+): psi(y) = re_curve(invert(y)).
    double psi(double y) const { return re_curve(invert(y)); }
};

} // namespace koenigs
