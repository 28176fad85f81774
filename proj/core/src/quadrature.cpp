#include "relkin/quadrature.hpp"

#include <cmath>
#include <vector>

#include "relkin/errors.hpp"

namespace relkin {
namespace {

struct Panel {
    double a, b, fa, fm, fb, whole, tol;
    int depth;
};

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  const SimpsonOptions& options) {
    QuadratureResult result;
    if (a == b) {
        return result;
    }
    const double sign = b > a ? 1.0 : -1.0;
    if (b < a) {
        std::swap(a, b);
    }

    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    std::vector<Panel> stack;
    stack.push_back({a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), options.abs_tol, 0});

    // Explicit stack: recursion depth on steep integrands can be large.
    while (!stack.empty()) {
        const Panel p = stack.back();
        stack.pop_back();

        const double mid = 0.5 * (p.a + p.b);
        const double lm = 0.5 * (p.a + mid);
        const double rm = 0.5 * (mid + p.b);
        const double flm = f(lm), frm = f(rm);
        const double left = simpson(p.a, mid, p.fa, flm, p.fm);
        const double right = simpson(mid, p.b, p.fm, frm, p.fb);
        const double delta = left + right - p.whole;

        if (std::abs(delta) <= 15.0 * p.tol || p.depth >= options.max_depth) {
            result.value += left + right + delta / 15.0;
            result.error_estimate += std::abs(delta) / 15.0;
            continue;
        }
        if (++result.subdivisions > options.max_subdivisions) {
            throw ConvergenceError("adaptive Simpson: subdivision cap reached");
        }
        stack.push_back({mid, p.b, p.fm, frm, p.fb, right, 0.5 * p.tol, p.depth + 1});
        stack.push_back({p.a, mid, p.fa, flm, p.fm, left, 0.5 * p.tol, p.depth + 1});
    }
    result.value *= sign;
    return result;
}

}  // namespace relkin
