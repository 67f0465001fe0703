#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "magnus/errors.hpp"

namespace magnus {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// A point on the Riemann surface of log, stored as modulus and an argument
/// that is not reduced modulo 2*pi. Arguments are limited to [-2*pi, 2*pi].
class BranchedComplex {
public:
    BranchedComplex() = default;

    BranchedComplex(double modulus, double argument) : modulus_(modulus), argument_(argument) {
        if (!(modulus >= 0.0) || !std::isfinite(modulus))
            throw DomainError("BranchedComplex: modulus must be finite and nonnegative");
        if (!(std::abs(argument) <= 2.0 * kPi + 1e-12))
            throw SectorError("BranchedComplex: |argument| must not exceed 2*pi");
        if (modulus_ == 0.0) argument_ = 0.0;
    }

    /// Principal-branch point, argument in (-pi, pi].
    static BranchedComplex principal(cplx z) { return {std::abs(z), z == cplx{} ? 0.0 : std::arg(z)}; }

    double modulus() const { return modulus_; }
    double argument() const { return argument_; }

    cplx to_principal() const { return std::polar(modulus_, argument_); }

    /// log z on this sheet.
    cplx log() const {
        if (modulus_ == 0.0) throw DomainError("BranchedComplex::log of zero");
        return {std::log(modulus_), argument_};
    }

    /// z^p evaluated with this point's argument.
    cplx pow(cplx p) const {
        if (modulus_ == 0.0) return p == cplx{} ? cplx{1.0} : cplx{};
        return std::exp(p * log());
    }

    /// Square root with argument halved, so |arg sqrt| <= pi.
    BranchedComplex sqrt() const { return {std::sqrt(modulus_), 0.5 * argument_}; }

    /// Multiply by r*e^{i phi}; the argument is shifted, not reduced.
    BranchedComplex scaled(double r, double phi) const { return {modulus_ * r, argument_ + phi}; }

    BranchedComplex squared() const { return {modulus_ * modulus_, 2.0 * argument_}; }

private:
    double modulus_ = 0.0;
    double argument_ = 0.0;
};

/// A complex number held as mantissa * exp(log_scale), used where values can
/// leave the double range (gamma-weighted functions at large parameters).
struct LogScaled {
    cplx mantissa{};
    cplx log_scale{};

    static LogScaled from(cplx v) { return {v, {}}; }

    cplx value() const {
        if (mantissa == cplx{}) return {};
        return mantissa * std::exp(log_scale);
    }

    /// log of the value (principal in the imaginary part only up to 2*pi*k).
    cplx log() const { return std::log(mantissa) + log_scale; }

    friend LogScaled operator*(const LogScaled& x, const LogScaled& y) {
        return {x.mantissa * y.mantissa, x.log_scale + y.log_scale};
    }
    friend LogScaled operator*(const LogScaled& x, cplx f) { return {x.mantissa * f, x.log_scale}; }

    /// Move the magnitude of the mantissa into log_scale.
    LogScaled normalized() const {
        double m = std::abs(mantissa);
        if (m == 0.0 || !std::isfinite(m)) return *this;
        return {mantissa / m, log_scale + std::log(m)};
    }
};

}  // namespace magnus
