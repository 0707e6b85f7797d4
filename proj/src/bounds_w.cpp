#include "gbx/bounds.hpp"

namespace gbx {

namespace {

// Series seed near the branch point y = -1/e: W = -1 + p - p^2/3 + 11 p^3/72
// with p = +-sqrt(2(e y + 1)); the sign picks the branch.
real50 branch_point_seed(const real50& y, int branch) {
    real50 p = sqrt(2 * (r50::e() * y + 1));
    if (branch == -1) p = -p;
    return -1 + p - p * p / 3 + 11 * p * p * p / 72;
}

} // namespace

real50 lambert_w(int branch, const real50& y) {
    if (branch != 0 && branch != -1)
        throw domain_error("lambert_w: branch must be 0 or -1");
    const real50 min_y = -exp(real50(-1));
    if (y < min_y) {
        // Tolerate rounding at the branch point itself.
        if (y > min_y * (1 + real50("1e-45"))) return real50(-1);
        throw domain_error("lambert_w: y must be >= -1/e");
    }
    if (branch == 0 && y == 0) return 0;
    if (branch == -1 && y >= 0)
        throw domain_error("lambert_w: branch -1 needs -1/e <= y < 0");

    real50 w;
    if (r50::e() * y + 1 < real50("0.25")) {
        w = branch_point_seed(y, branch);
    } else if (branch == 0) {
        // y >= -0.27...: log(1+y) tracks W well below e, the asymptotic form
        // above.
        w = y > r50::e() ? log(y) - log(log(y)) : log(1 + y);
    } else {
        // Branch -1 away from the branch point: y in (-0.27..., 0).
        real50 l1 = log(-y);
        w = l1 - log(-l1);
    }

    // Halley: w <- w - f/(f' - f f''/(2 f')) with f = w e^w - y.
    const real50 tol("1e-45");
    for (int iter = 0; iter < 200; ++iter) {
        real50 ew = exp(w);
        real50 f = w * ew - y;
        if (f == 0) break;
        real50 w1 = w + 1;
        // At the branch point the derivative vanishes; the series seed is
        // already as accurate as the arithmetic allows there.
        if (w1 == 0) break;
        real50 denom = ew * w1 - (w + 2) * f / (2 * w1);
        real50 step = f / denom;
        w -= step;
        if (abs(step) <= abs(w) * tol) break;
    }
    return w;
}

} // namespace gbx
