#include "rebo/numerics.hpp"

#include <stdexcept>

namespace rebo {

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("fit_line: x and y lengths differ");
    }
    const std::size_t n = x.size();
    if (n < 2) {
        throw std::invalid_argument("fit_line: need at least two points");
    }

    KahanSum sx, sy;
    for (std::size_t i = 0; i < n; ++i) {
        sx.add(x[i]);
        sy.add(y[i]);
    }
    const double mx = sx.value() / static_cast<double>(n);
    const double my = sy.value() / static_cast<double>(n);

    KahanSum sxx, sxy, syy;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxx.add(dx * dx);
        sxy.add(dx * dy);
        syy.add(dy * dy);
    }
    if (sxx.value() <= 0.0) {
        throw std::invalid_argument("fit_line: degenerate fit (all x equal)");
    }

    LineFit fit;
    fit.slope = sxy.value() / sxx.value();
    fit.intercept = my - fit.slope * mx;

    KahanSum ss_res;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - (fit.slope * x[i] + fit.intercept);
        ss_res.add(r * r);
    }
    const double ss_tot = syy.value();
    fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res.value() / ss_tot : 1.0;
    if (n > 2) {
        const double var = ss_res.value() / static_cast<double>(n - 2);
        fit.slope_stderr = std::sqrt(var / sxx.value());
    }
    return fit;
}

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double x_tol, double f_tol, int max_iter) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw std::invalid_argument("bisect: no sign change on the bracket");
    }
    double mid = 0.5 * (lo + hi);
    for (int i = 0; i < max_iter; ++i) {
        mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (std::abs(fm) < f_tol || (hi - lo) < x_tol) {
            return mid;
        }
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return mid;
}

}  // namespace rebo
