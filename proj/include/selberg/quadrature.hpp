#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace selberg {

// Gauss-Kronrod 7-15 on [a, b]; err is the usual (200|G7-K15|)^{3/2} estimate.
template <class Func>
double gauss_kronrod_15(const Func& f, double a, double b, double& err) {
    static const double nw[8][3] = {
        {0.000000000000000, 0.417959183673469, 0.209482141084728},
        {0.405845151377397, 0.381830050505119, 0.190350578064785},
        {0.741531185599394, 0.279705391489277, 0.140653259715525},
        {0.949107912342759, 0.129484966168870, 0.063092092629979},
        {0.207784955007898, 0.0, 0.204432940075298},
        {0.586087235467691, 0.0, 0.169004726639267},
        {0.864864423359769, 0.0, 0.104790010322250},
        {0.991455371120813, 0.0, 0.022935322010529}};
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double y0 = f(mid);
    double g7 = nw[0][1] * y0;
    double k15 = nw[0][2] * y0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * nw[i][0];
        const double yi = f(mid + dx) + f(mid - dx);
        g7 += nw[i][1] * yi;
        k15 += nw[i][2] * yi;
    }
    g7 *= half;
    k15 *= half;
    err = 200.0 * std::fabs(g7 - k15);
    err *= std::sqrt(err);
    return k15;
}

// Bisection-stack adaptive quadrature to an absolute tolerance.
template <class Func>
double adaptive_quadrature(const Func& f, double a, double b, double abs_tol,
                           std::size_t max_intervals = 100000) {
    struct Panel { double a, b; };
    std::vector<Panel> stack{{a, b}};
    double total = 0.0;
    std::size_t used = 0;
    while (!stack.empty()) {
        const Panel p = stack.back();
        stack.pop_back();
        double err = 0.0;
        const double val = gauss_kronrod_15(f, p.a, p.b, err);
        if (err <= abs_tol * (p.b - p.a) / (b - a) || p.b - p.a < 1e-14 * (b - a)) {
            total += val;
            continue;
        }
        if (++used > max_intervals)
            throw std::runtime_error("adaptive_quadrature: interval budget exhausted");
        const double mid = 0.5 * (p.a + p.b);
        stack.push_back({p.a, mid});
        stack.push_back({mid, p.b});
    }
    return total;
}

}  // namespace selberg
