// U, D and cylinder functions on a few sheets.

#include <cstdio>

#include "magnus/specfun.hpp"

using namespace magnus;
using namespace magnus::specfun;

static void show(const char* label, cplx v) { std::printf("%-34s % .15e %+.15ei\n", label, v.real(), v.imag()); }

int main() {
    show("U(1/2, 1, 2)", hyp_u(0.5, 1.0, BranchedComplex(2.0, 0.0)));
    show("U(1/2, 1, 2 e^{3 pi i / 2})", hyp_u(0.5, 1.0, BranchedComplex(2.0, 1.5 * kPi)));
    show("Gamma(a) U(a, 1/2, 1), a = 1/4-50i", gamma_hyp_u(cplx(0.25, -50.0), 0.5, BranchedComplex(1.0, 0.0)));
    show("D_{-1/2}(sqrt 2)", pcf_d(-0.5, std::sqrt(2.0)));
    show("J_0(1)", cyl_fun(CylKind(CylFamily::J, 0), BranchedComplex(1.0, 0.0)));
    show("H2_0(1 e^{-5pi i/4})", cyl_fun(CylKind(CylFamily::H2, 0), BranchedComplex(1.0, -1.25 * kPi)));
    show("K_1(2 + i)", cyl_fun(CylKind(CylFamily::K, 1), BranchedComplex::principal({2.0, 1.0})));
}
