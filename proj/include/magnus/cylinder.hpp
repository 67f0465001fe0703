#pragma once

// Cylinder functions of orders 0 and 1 (and K of order 1/2) from U:
//   K_nu(z)   = sqrt(pi) (2z)^nu e^{-z} U(nu + 1/2, 2 nu + 1, 2z)
//   H1_nu(z)  = 2/(pi i) e^{-i nu pi/2} K_nu(z e^{-i pi/2})
//   H2_nu(z)  = -2/(pi i) e^{i nu pi/2} K_nu(z e^{i pi/2})
//   J = (H1 + H2)/2,  Y = (H1 - H2)/(2i)
// Arguments are tracked on the log surface, so the Hankel functions are
// valid on their full sectors without separate continuation formulas.

#include <cmath>
#include <complex>
#include <string>

#include "magnus/branched_complex.hpp"
#include "magnus/errors.hpp"
#include "magnus/hyp_u.hpp"

namespace magnus::specfun {

enum class CylFamily { J, Y, H1, H2, K };

/// A cylinder function kind: family and order. Orders 0 and 1 for every
/// family; K also admits order 1/2.
class CylKind {
public:
    CylKind(CylFamily family, double order) : family_(family), order_(order) {
        const bool ok = order == 0.0 || order == 1.0 || (family == CylFamily::K && order == 0.5);
        if (!ok) throw DomainError("CylKind: unsupported order");
    }
    CylFamily family() const { return family_; }
    double order() const { return order_; }

private:
    CylFamily family_;
    double order_;
};

/// K_nu on the log surface, any complex order.
inline cplx bessel_k(cplx nu, const BranchedComplex& z) {
    if (z.modulus() == 0.0) throw DomainError("bessel_k: z = 0");
    const BranchedComplex two_z = z.scaled(2.0, 0.0);
    const cplx zp = z.to_principal();
    LogScaled u{hyp_u(nu + 0.5, 2.0 * nu + 1.0, two_z), 0.0};
    u.log_scale = nu * two_z.log() - zp + 0.5 * std::log(kPi);
    return u.value();
}

namespace detail {

inline void check_sector(const BranchedComplex& z, double lo, double hi, const char* what) {
    const double th = z.argument();
    if (!(th > lo && th < hi)) throw SectorError(std::string("cyl_fun: argument outside the sector for ") + what);
}

inline cplx hankel1(double nu, const BranchedComplex& z) {
    const cplx i(0.0, 1.0);
    return 2.0 / (kPi * i) * std::exp(-i * nu * kPi * 0.5) * bessel_k(nu, z.scaled(1.0, -0.5 * kPi));
}

inline cplx hankel2(double nu, const BranchedComplex& z) {
    const cplx i(0.0, 1.0);
    return -2.0 / (kPi * i) * std::exp(i * nu * kPi * 0.5) * bessel_k(nu, z.scaled(1.0, 0.5 * kPi));
}

}  // namespace detail

/// Value of the cylinder function on the sheet given by z's argument.
/// Sectors: J, Y (-pi/2, pi/2); H1 (-pi/2, 3pi/2); H2 (-3pi/2, pi/2); K (-pi, pi).
inline cplx cyl_fun(const CylKind& kind, const BranchedComplex& z) {
    const double nu = kind.order();
    if (z.modulus() == 0.0) {
        if (kind.family() == CylFamily::J) return nu == 0.0 ? 1.0 : 0.0;
        throw DomainError("cyl_fun: singular at z = 0");
    }
    switch (kind.family()) {
        case CylFamily::K:
            detail::check_sector(z, -kPi, kPi, "K");
            return bessel_k(nu, z);
        case CylFamily::H1:
            detail::check_sector(z, -0.5 * kPi, 1.5 * kPi, "H1");
            return detail::hankel1(nu, z);
        case CylFamily::H2:
            detail::check_sector(z, -1.5 * kPi, 0.5 * kPi, "H2");
            return detail::hankel2(nu, z);
        case CylFamily::J:
            detail::check_sector(z, -0.5 * kPi, 0.5 * kPi, "J");
            return 0.5 * (detail::hankel1(nu, z) + detail::hankel2(nu, z));
        case CylFamily::Y:
            detail::check_sector(z, -0.5 * kPi, 0.5 * kPi, "Y");
            return cplx(0.0, -0.5) * (detail::hankel1(nu, z) - detail::hankel2(nu, z));
    }
    throw DomainError("cyl_fun: unknown kind");
}

}  // namespace magnus::specfun
