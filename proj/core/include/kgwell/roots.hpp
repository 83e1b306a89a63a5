#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace kgwell {

/// Closed search interval for a scalar root.
struct Window {
    double lo;
    double hi;
};

struct RootOptions {
    double tol = 1e-10;      ///< bracket width at convergence
    int max_iterations = 200;
};

/// Grid points lo + i (hi - lo)/(n - 1), i = 0..n-1, with both ends exact.
std::vector<double> uniform_grid(Window w, std::size_t n);

/// Evaluates f on every point. Work may be spread over `threads` workers; the
/// output order always follows the input order. Exceptions from f are rethrown.
std::vector<double> evaluate_on_grid(const std::function<double(double)>& f,
                                     const std::vector<double>& xs, unsigned threads = 0);

/// Bisection-safeguarded secant refinement of a root in [a, b] with f(a) f(b) < 0.
/// The returned point lies within opts.tol of a sign change of f.
double refine_root(const std::function<double(double)>& f, double a, double b, double fa,
                   double fb, const RootOptions& opts = {});

/// Scan f on a uniform grid, bracket every sign change, refine each.
/// Grid points where f is exactly zero are reported as roots directly.
/// Intervals touching a non-finite sample are skipped.
std::vector<double> find_roots(const std::function<double(double)>& f, Window w,
                               std::size_t grid_n, const RootOptions& opts = {},
                               unsigned threads = 0);

/// Number of worker threads used when 0 is requested.
unsigned default_thread_count();

} // namespace kgwell
