#pragma once

// Parabolic cylinder function D_nu(z) through U:
//   D_nu(z) = 2^{nu/2} e^{-z^2/4} U(-nu/2, 1/2, z^2/2)
//   D_nu(z) = 2^{(nu-1)/2} e^{-z^2/4} z U((1-nu)/2, 3/2, z^2/2)
// z^2/2 is taken with argument 2 arg z, which keeps both forms valid on the
// whole plane although U itself is multivalued.

#include <complex>

#include "magnus/branched_complex.hpp"
#include "magnus/hyp_u.hpp"

namespace magnus::specfun {

namespace detail {

inline BranchedComplex half_square(const BranchedComplex& z) {
    return {0.5 * z.modulus() * z.modulus(), 2.0 * z.argument()};
}

inline constexpr double kLn2 = 0.69314718055994530941723212145817657;

}  // namespace detail

/// D_nu(z) from the first representation.
inline cplx pcf_d(cplx nu, cplx z) {
    const auto zb = BranchedComplex::principal(z);
    const cplx u = hyp_u(-0.5 * nu, 0.5, detail::half_square(zb));
    return u * std::exp(0.5 * nu * detail::kLn2 - 0.25 * z * z);
}

/// D_nu(z) from the second representation.
inline cplx pcf_d2(cplx nu, cplx z) {
    // z U(., 3/2, z^2/2) -> sqrt(2 pi) / Gamma((1-nu)/2) as z -> 0.
    if (z == cplx{}) return std::exp(0.5 * nu * detail::kLn2) * std::sqrt(kPi) * rgamma(0.5 * (1.0 - nu));
    const auto zb = BranchedComplex::principal(z);
    const cplx u = hyp_u(0.5 * (1.0 - nu), 1.5, detail::half_square(zb));
    return z * u * std::exp(0.5 * (nu - 1.0) * detail::kLn2 - 0.25 * z * z);
}

/// Gamma(-nu/2) D_nu(z), log-scaled. The argument of z only fixes the sheet
/// of z^2/2; the value is the same for z and z e^{2 pi i}.
inline LogScaled pcf_d_gamma1(cplx nu, const BranchedComplex& z) {
    const cplx zp = z.to_principal();
    LogScaled g = gamma_hyp_u_scaled(-0.5 * nu, 0.5, detail::half_square(z));
    g.log_scale += 0.5 * nu * detail::kLn2 - 0.25 * zp * zp;
    return g;
}

/// Gamma((1-nu)/2) D_nu(z), log-scaled.
inline LogScaled pcf_d_gamma2(cplx nu, const BranchedComplex& z) {
    const cplx zp = z.to_principal();
    LogScaled g = gamma_hyp_u_scaled(0.5 * (1.0 - nu), 1.5, detail::half_square(z));
    g.mantissa *= zp;
    g.log_scale += 0.5 * (nu - 1.0) * detail::kLn2 - 0.25 * zp * zp;
    return g;
}

}  // namespace magnus::specfun
