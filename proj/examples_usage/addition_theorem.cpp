// Both sides of the K0 addition theorem at a complex point, and the decay
// model that set the truncation.

#include <cstdio>

#include "magnus/theorems.hpp"

using namespace magnus;
using namespace magnus::theorems;

int main() {
    const auto k = TheoremCase::xi_eta(TheoremId::K0_ADD, {1.2, 0.3}, {0.9, -0.2});
    const auto d = domain_check(k);
    std::printf("margins %.6f %.6f  alpha %.6f %.6f\n", d.margins[0], d.margins[1], d.model.alpha_plus,
                d.model.alpha_minus);
    const cplx l = lhs(k);
    const auto r = evaluate_rhs(k, 1e-10);
    std::printf("lhs % .15e %+.15ei\n", l.real(), l.imag());
    std::printf("rhs % .15e %+.15ei  (T = %.1f, %zu evaluations)\n", r.value.real(), r.value.imag(),
                r.truncation_height, r.evaluations);
}
