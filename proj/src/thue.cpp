#include "deca/thue.hpp"

#include <algorithm>

namespace deca::thue {

ThueSolutionSet solve_bounded(const descent::ThueInstance& instance, const Int& B) {
    if (sign(instance.c2) == 0) throw domain_error("solve_bounded: c2 must be nonzero");
    if (sign(instance.c1) == 0) throw domain_error("solve_bounded: c1 must be nonzero");
    if (instance.degree < 2) throw domain_error("solve_bounded: degree must be >= 2");
    if (B < 1) throw domain_error("solve_bounded: bound must be >= 1");

    ThueSolutionSet out{instance, B, {}};
    const unsigned d = instance.degree;
    for (Int x = -B; x <= B; ++x) {
        Int rhs = instance.c3 - instance.c1 * pow_ui(x, d);
        if (!divides(instance.c2, rhs)) continue;
        Int yd = exact_div(rhs, instance.c2);
        if (d % 2 == 0) {
            if (sign(yd) < 0) continue;
            auto r = arith::iroot(yd, d);
            if (!r.exact) continue;
            if (sign(r.root) == 0) {
                out.solutions.emplace_back(x, 0);
            } else {
                out.solutions.emplace_back(x, -r.root);
                out.solutions.emplace_back(x, r.root);
            }
        } else {
            auto r = arith::iroot(yd, d);
            if (!r.exact) continue;
            out.solutions.emplace_back(x, r.root);
        }
    }
    std::sort(out.solutions.begin(), out.solutions.end());
    return out;
}

}  // namespace deca::thue
