#pragma once

#include <cmath>
#include <cstddef>

namespace kgwell {

/// State of a scalar second-order ODE psi'' = f(x) psi.
struct OdeState {
    double psi;
    double dpsi;
};

/// Classical fourth-order Runge-Kutta for the linear equation psi'' = -q(x) psi,
/// integrated from x0 to x1 with the smallest uniform step not exceeding max_step.
/// `observe(x, state)` is called after every step (and once at x0).
template <class Q, class Observer>
OdeState integrate_linear_rk4(Q&& q, double x0, double x1, OdeState s, double max_step,
                              Observer&& observe) {
    const double span = x1 - x0;
    const auto n = static_cast<std::size_t>(std::ceil(std::abs(span) / max_step));
    observe(x0, s);
    if (n == 0) return s;
    const double h = span / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = x0 + h * static_cast<double>(i);
        const double qa = q(x);
        const double qm = q(x + 0.5 * h);
        const double qb = q(x + h);

        const double k1p = s.dpsi;
        const double k1d = -qa * s.psi;
        const double k2p = s.dpsi + 0.5 * h * k1d;
        const double k2d = -qm * (s.psi + 0.5 * h * k1p);
        const double k3p = s.dpsi + 0.5 * h * k2d;
        const double k3d = -qm * (s.psi + 0.5 * h * k2p);
        const double k4p = s.dpsi + h * k3d;
        const double k4d = -qb * (s.psi + h * k3p);

        s.psi += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
        s.dpsi += h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
        observe(i + 1 == n ? x1 : x + h, s);
    }
    return s;
}

template <class Q>
OdeState integrate_linear_rk4(Q&& q, double x0, double x1, OdeState s, double max_step) {
    return integrate_linear_rk4(q, x0, x1, s, max_step, [](double, const OdeState&) {});
}

} // namespace kgwell
