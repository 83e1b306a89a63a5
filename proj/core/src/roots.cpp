#include "kgwell/roots.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "kgwell/errors.hpp"

namespace kgwell {

unsigned default_thread_count() {
    const unsigned hw = std::thread::hardware_concurrency();
    return std::clamp(hw, 1u, 16u);
}

std::vector<double> uniform_grid(Window w, std::size_t n) {
    if (n < 2) {
        throw config_error("uniform_grid: need at least two points");
    }
    std::vector<double> xs(n);
    const double span = w.hi - w.lo;
    const double denom = static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = w.lo + span * (static_cast<double>(i) / denom);
    }
    xs.front() = w.lo;
    xs.back() = w.hi;
    return xs;
}

std::vector<double> evaluate_on_grid(const std::function<double(double)>& f,
                                     const std::vector<double>& xs, unsigned threads) {
    std::vector<double> out(xs.size());
    if (threads == 0) threads = default_thread_count();
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(xs.size() / 8 + 1)));

    if (threads == 1) {
        for (std::size_t i = 0; i < xs.size(); ++i) out[i] = f(xs[i]);
        return out;
    }

    std::vector<std::exception_ptr> failures(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::size_t chunk = (xs.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            const std::size_t begin = t * chunk;
            const std::size_t end = std::min(xs.size(), begin + chunk);
            try {
                for (std::size_t i = begin; i < end; ++i) out[i] = f(xs[i]);
            } catch (...) {
                failures[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : failures) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

double refine_root(const std::function<double(double)>& f, double a, double b, double fa,
                   double fb, const RootOptions& opts) {
    if (a > b) {
        std::swap(a, b);
        std::swap(fa, fb);
    }
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (std::signbit(fa) == std::signbit(fb)) {
        throw config_error("refine_root: interval does not bracket a sign change");
    }

    // Secant pair, most recent last.
    double x_prev = a, f_prev = fa;
    double x_last = b, f_last = fb;
    if (std::abs(fa) < std::abs(fb)) {
        std::swap(x_prev, x_last);
        std::swap(f_prev, f_last);
    }
    bool force_bisection = false;

    for (int it = 0; it < opts.max_iterations; ++it) {
        if (b - a <= opts.tol) break;

        double x = 0.5 * (a + b);
        bool secant = false;
        if (!force_bisection && f_last != f_prev) {
            const double s = x_last - f_last * (x_last - x_prev) / (f_last - f_prev);
            if (s > a && s < b) {
                x = s;
                secant = true;
                // Step at least tol so the bracket keeps shrinking near convergence.
                if (std::abs(x - x_last) < opts.tol) {
                    x = x_last + std::copysign(opts.tol, x - x_last);
                    if (!(x > a && x < b)) x = 0.5 * (a + b);
                }
            }
        }

        const double fx = f(x);
        if (!std::isfinite(fx)) {
            throw accuracy_error("refine_root", "non-finite function value", x);
        }
        if (fx == 0.0) return x;

        if (std::signbit(fx) == std::signbit(fa)) {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }
        // Secant must at least halve |f|; otherwise fall back to bisection next.
        force_bisection = secant && std::abs(fx) > 0.5 * std::abs(f_last);
        x_prev = x_last;
        f_prev = f_last;
        x_last = x;
        f_last = fx;
    }
    if (b - a > opts.tol) {
        throw accuracy_error("refine_root", "iteration cap reached", 0.5 * (a + b), b - a);
    }
    return std::abs(fa) <= std::abs(fb) ? a : b;
}

std::vector<double> find_roots(const std::function<double(double)>& f, Window w,
                               std::size_t grid_n, const RootOptions& opts, unsigned threads) {
    const std::vector<double> xs = uniform_grid(w, grid_n);
    const std::vector<double> fs = evaluate_on_grid(f, xs, threads);

    std::vector<double> roots;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (fs[i] == 0.0) {
            roots.push_back(xs[i]);
            continue;
        }
        if (i + 1 == xs.size()) break;
        const double f0 = fs[i];
        const double f1 = fs[i + 1];
        if (!std::isfinite(f0) || !std::isfinite(f1) || f1 == 0.0) continue;
        if (std::signbit(f0) != std::signbit(f1)) {
            roots.push_back(refine_root(f, xs[i], xs[i + 1], f0, f1, opts));
        }
    }
    return roots;
}

} // namespace kgwell
