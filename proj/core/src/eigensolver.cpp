#include "kgwell/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kgwell/errors.hpp"
#include "kgwell/ode.hpp"
#include "kgwell/potential.hpp"

namespace kgwell {

namespace {

#ifdef __SIZEOF_FLOAT128__
using wide_real = __float128;
#else
using wide_real = long double;
#endif

constexpr double coeff_identity_tol = 1e-12;
constexpr double max_wronskian_drift = 1e-9;

bool close_rel(double x, double ref, double tol) {
    return std::abs(x - ref) <= tol * std::abs(ref);
}

// Mirror a value computed at |y| onto y < 0 for the given parity.
InteriorSolution::Value mirror(InteriorSolution::Value v, Parity p) {
    if (p == Parity::even) return {v.psi, -v.dpsi_dy};
    return {-v.psi, v.dpsi_dy};
}

double simpson(const std::vector<double>& f, double h) {
    const std::size_t n = f.size() - 1;
    double acc = f.front() + f.back();
    for (std::size_t i = 1; i < n; ++i) {
        acc += (i % 2 == 1 ? 4.0 : 2.0) * f[i];
    }
    return acc * h / 3.0;
}

} // namespace

std::string_view to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

Parity parity_from_string(std::string_view s) {
    if (s == "even") return Parity::even;
    if (s == "odd") return Parity::odd;
    throw invalid_parameter("parity", "expected 'even' or 'odd'");
}

std::string_view to_string(InteriorMethod m) {
    return m == InteriorMethod::kummer_series ? "pcf-kummer" : "pcf-ode";
}

std::string_view to_string(NormKind k) { return k == NormKind::l2 ? "L2" : "KG-charge"; }

std::string_view to_string(Region r) {
    switch (r) {
    case Region::left_tail:
        return "left-tail";
    case Region::well:
        return "well";
    case Region::right_tail:
        return "right-tail";
    }
    return "well";
}

InteriorCoeffs interior_coeffs(double e_bar, double m_bar, double v_bar) {
    if (!(v_bar > 0.0) || !std::isfinite(v_bar)) {
        throw invalid_parameter("v_bar", "must be finite and positive");
    }
    // The discriminant B^2 - 4AC cancels to 4 V0^2 m^2; evaluate it in wide
    // precision so the cancellation does not eat the result when m << E + V0.
    const wide_real e = e_bar;
    const wide_real v = v_bar;
    const wide_real m = m_bar;
    const wide_real a = v * v;
    const wide_real b = -2 * e * v - 2 * v * v;
    const wide_real c = (e + v) * (e + v) - m * m;
    const wide_real disc = b * b - 4 * a * c;

    InteriorCoeffs out{};
    out.a_coef = static_cast<double>(a);
    out.b_coef = static_cast<double>(b);
    out.c_coef = static_cast<double>(c);
    out.d_coef = static_cast<double>(disc / (4 * a));
    const double four_a = 4.0 * out.a_coef;
    out.b_std = static_cast<double>(disc) / (four_a * std::sqrt(four_a));

    const double expected_b = m_bar * m_bar / (2.0 * v_bar);
    if (!close_rel(out.b_std, expected_b, coeff_identity_tol)) {
        throw internal_consistency("interior_coeffs: b = " + std::to_string(out.b_std) +
                                   " differs from m^2/(2 V0) = " + std::to_string(expected_b));
    }
    if (!close_rel(out.d_coef, out.b_std * std::sqrt(four_a), coeff_identity_tol)) {
        throw internal_consistency("interior_coeffs: D != b sqrt(4A)");
    }
    return out;
}

RhoMap rho_of_y(double y, const InteriorCoeffs& c) {
    const double sqrt_a = std::sqrt(c.a_coef);
    const double quarter_root = std::sqrt(2.0 * sqrt_a); // (4A)^{1/4}
    const double z = 2.0 * sqrt_a * (y + c.b_coef / (2.0 * c.a_coef));
    return {z, z / quarter_root, 2.0 * sqrt_a / quarter_root};
}

InteriorSolution::InteriorSolution(double e_bar, double m_bar, double v_bar, Parity parity,
                                   const SolverOptions& opts)
    : coeffs_(interior_coeffs(e_bar, m_bar, v_bar)), parity_(parity), opts_(opts) {
    const RhoMap start = rho_of_y(0.0, coeffs_);
    const RhoMap end = rho_of_y(1.0, coeffs_);
    rho0_ = start.rho;
    drho_dy_ = start.drho_dy;

    if (std::max(std::abs(start.rho), std::abs(end.rho)) > pcf_rho_max) {
        method_ = InteriorMethod::pcf_ode;
        return;
    }
    try {
        const PcfValues p0 = pcf_pair(coeffs_.b_std, rho0_);
        const PcfValues p1 = pcf_pair(coeffs_.b_std, end.rho);
        // For large b the pair grows like exp(pi b / 2) and combining it cancels
        // every digit; the unit Wronskian exposes that.
        const auto wronskian_ok = [](const PcfValues& p) {
            return std::abs(p.even * p.odd_deriv - p.odd * p.even_deriv - 1.0) <= max_wronskian_drift;
        };
        if (!wronskian_ok(p0) || !wronskian_ok(p1)) {
            method_ = InteriorMethod::pcf_ode;
            return;
        }
        // Combination fixed by the parity condition at y = 0; the Wronskian of
        // the pair is 1, which sets psi(0) = 1 or dpsi/drho(0) = 1.
        double wronskian = 0.0;
        if (parity_ == Parity::even) {
            c_even_ = p0.odd_deriv;
            c_odd_ = -p0.even_deriv;
            wronskian = c_even_ * p0.even + c_odd_ * p0.odd;
        } else {
            c_even_ = -p0.odd;
            c_odd_ = p0.even;
            wronskian = c_even_ * p0.even_deriv + c_odd_ * p0.odd_deriv;
            wronskian *= drho_dy_;
        }
        if (wronskian == 0.0 || !std::isfinite(wronskian)) {
            throw degenerate_error("interior_solution: singular parity system");
        }
        c_even_ /= wronskian;
        c_odd_ /= wronskian;

        const double psi1 = c_even_ * p1.even + c_odd_ * p1.odd;
        const double dpsi1 = c_even_ * p1.even_deriv + c_odd_ * p1.odd_deriv;
        const double magnitude = std::abs(c_even_) * (std::abs(p1.even) + std::abs(p1.even_deriv)) +
                                 std::abs(c_odd_) * (std::abs(p1.odd) + std::abs(p1.odd_deriv));
        const double condition = magnitude / (std::abs(psi1) + std::abs(dpsi1));
        if (!(condition <= opts_.max_basis_condition)) {
            method_ = InteriorMethod::pcf_ode;
        }
    } catch (const accuracy_error&) {
        method_ = InteriorMethod::pcf_ode;
    }
}

InteriorSolution::Value InteriorSolution::at_series(double rho) const {
    const PcfValues p = pcf_pair(coeffs_.b_std, rho);
    return {c_even_ * p.even + c_odd_ * p.odd,
            drho_dy_ * (c_even_ * p.even_deriv + c_odd_ * p.odd_deriv)};
}

InteriorSolution::Value InteriorSolution::at_ode(double rho) const {
    const double b = coeffs_.b_std;
    const auto q = [b](double r) { return r * r / 4.0 - b; };
    const OdeState init = parity_ == Parity::even ? OdeState{1.0, 0.0}
                                                  : OdeState{0.0, 1.0 / drho_dy_};
    const OdeState s = integrate_linear_rk4(q, rho0_, rho, init, opts_.ode_step * drho_dy_);
    if (!std::isfinite(s.psi) || !std::isfinite(s.dpsi)) {
        throw accuracy_error("interior_solution", "integration overflow");
    }
    return {s.psi, drho_dy_ * s.dpsi};
}

InteriorSolution::Value InteriorSolution::at(double y) const {
    if (!(y >= 0.0 && y <= 1.0)) {
        throw invalid_parameter("y", "interior solution is defined on 0 <= y <= 1");
    }
    const double rho = rho_of_y(y, coeffs_).rho;
    return method_ == InteriorMethod::kummer_series ? at_series(rho) : at_ode(rho);
}

InteriorValue interior_solution(double y, double e_bar, double m_bar, double v_bar, Parity parity,
                                const SolverOptions& opts) {
    decay_constant(e_bar, m_bar);
    const auto v = InteriorSolution(e_bar, m_bar, v_bar, parity, opts).at(y);
    return {v.psi, v.dpsi_dy};
}

double match_mismatch(double e_bar, double m_bar, double v_bar, Parity parity,
                      const SolverOptions& opts) {
    const double alpha = decay_constant(e_bar, m_bar);
    const auto edge = InteriorSolution(e_bar, m_bar, v_bar, parity, opts).at(1.0);
    return edge.dpsi_dy + alpha * edge.psi;
}

int count_nodes(const std::vector<Sample>& samples) {
    int nodes = 0;
    int last_sign = 0;
    for (const Sample& s : samples) {
        if (!(std::abs(s.y) < 1.0) || std::abs(s.psi) < 1e-12) continue;
        const int sign = s.psi > 0.0 ? 1 : -1;
        if (last_sign != 0 && sign != last_sign) ++nodes;
        last_sign = sign;
    }
    return nodes;
}

double l2_norm_squared(const BoundState& state) {
    const auto& g = state.well_grid;
    std::vector<double> f(g.size());
    std::transform(g.begin(), g.end(), f.begin(), [](const Sample& s) { return s.psi * s.psi; });
    const double h = (g.back().y - g.front().y) / static_cast<double>(g.size() - 1);
    const double edge = g.back().psi;
    // Each tail contributes psi(1)^2 / (2 alpha).
    return simpson(f, h) + edge * edge / state.alpha_bar;
}

double kg_charge(const BoundState& state, double v_bar) {
    const TriangularWell well(v_bar);
    const auto& g = state.well_grid;
    std::vector<double> f(g.size());
    std::transform(g.begin(), g.end(), f.begin(), [&](const Sample& s) {
        return (state.e_bar - potential_value(s.y, well)) * s.psi * s.psi;
    });
    const double h = (g.back().y - g.front().y) / static_cast<double>(g.size() - 1);
    const double edge = g.back().psi;
    return simpson(f, h) + state.e_bar * edge * edge / state.alpha_bar;
}

BoundState normalize(BoundState state, NormKind kind, double v_bar) {
    if (state.well_grid.size() < 3 || (state.well_grid.size() - 1) % 2 != 0) {
        throw config_error("normalize: well grid needs an even number of intervals");
    }
    if (!(state.alpha_bar > 0.0)) {
        throw degenerate_error("normalize: decay constant must be positive");
    }
    const double charge = kg_charge(state, v_bar);
    const double norm = kind == NormKind::l2 ? l2_norm_squared(state) : std::abs(charge);
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw degenerate_error("normalize: zero or non-finite norm");
    }
    const double scale = 1.0 / std::sqrt(norm);
    for (auto* grid : {&state.samples, &state.well_grid}) {
        for (Sample& s : *grid) {
            s.psi *= scale;
            s.dpsi_dy *= scale;
        }
    }
    state.c1 *= scale;
    state.d1 *= scale;
    state.psi_edge *= scale;
    state.dpsi_edge *= scale;
    state.normalization *= scale;
    state.norm_kind = kind;
    state.charge_sign = charge >= 0.0 ? 1 : -1;
    return state;
}

BoundState build_state(double e_bar, double m_bar, double v_bar, Parity parity,
                       const SpectrumOptions& opts) {
    BoundState st;
    st.e_bar = e_bar;
    st.parity = parity;
    st.alpha_bar = decay_constant(e_bar, m_bar);

    const InteriorSolution sol(e_bar, m_bar, v_bar, parity, opts.solver);
    st.method = sol.method();
    const auto edge = sol.at(1.0);
    st.psi_edge = edge.psi;
    st.dpsi_edge = edge.dpsi_dy;
    st.d1 = edge.psi * std::exp(st.alpha_bar);
    st.c1 = parity == Parity::even ? st.d1 : -st.d1;

    const auto eval = [&](double y) -> Sample {
        const double r = std::abs(y);
        const Region region = y < -1.0 ? Region::left_tail
                              : y > 1.0 ? Region::right_tail
                                        : Region::well;
        InteriorSolution::Value v;
        if (r <= 1.0) {
            v = r == 1.0 ? edge : sol.at(r);
        } else {
            const double psi = edge.psi * std::exp(-st.alpha_bar * (r - 1.0));
            v = {psi, -st.alpha_bar * psi};
        }
        if (y < 0.0) v = mirror(v, parity);
        return {y, v.psi, v.dpsi_dy, region};
    };

    // Symmetric grids: y_i = L (2i - (n-1)) / (n-1) makes y_{n-1-i} = -y_i exactly,
    // so every point is evaluated once at |y| and mirrored.
    const auto symmetric_grid = [&](std::size_t n, double half_width) {
        std::vector<Sample> out(n);
        const double denom = static_cast<double>(n - 1);
        for (std::size_t i = n / 2; i < n; ++i) {
            const double y = half_width * (2.0 * static_cast<double>(i) - denom) / denom;
            out[i] = eval(y);
            const std::size_t j = n - 1 - i;
            if (j != i) {
                const auto m = mirror({out[i].psi, out[i].dpsi_dy}, parity);
                Region region = out[i].region == Region::right_tail ? Region::left_tail
                                                                    : out[i].region;
                out[j] = {-y, m.psi, m.dpsi_dy, region};
            }
        }
        return out;
    };

    std::size_t well_intervals = std::max<std::size_t>(opts.well_intervals, 200);
    if (well_intervals % 2 != 0) ++well_intervals;
    st.well_grid = symmetric_grid(well_intervals + 1, 1.0);
    st.samples = symmetric_grid(std::max<std::size_t>(opts.samples, 2), opts.y_plot);
    st.nodes = count_nodes(st.well_grid);
    return normalize(std::move(st), opts.norm, v_bar);
}

SpectrumReport find_spectrum(double m_bar, double v_bar, const SpectrumOptions& opts) {
    if (!(m_bar > 0.0) || !std::isfinite(m_bar)) {
        throw invalid_parameter("m_bar", "must be finite and positive");
    }
    const TriangularWell well(v_bar);
    if (opts.grid_n < 16) {
        throw config_error("find_spectrum: grid_n must be at least 16");
    }
    if (!(opts.tol > 0.0)) {
        throw config_error("find_spectrum: tol must be positive");
    }
    const Window window = opts.window.value_or(Window{-m_bar + 1e-6, m_bar - 1e-6});
    if (!(window.lo < window.hi) || window.lo < -m_bar + window_margin ||
        window.hi > m_bar - window_margin) {
        throw config_error("find_spectrum: window must lie inside (-m + 1e-9, m - 1e-9)");
    }

    SpectrumReport report;
    report.m_bar = m_bar;
    report.v_bar = well.v_bar;
    report.tol = opts.tol;
    report.grid_n = opts.grid_n;
    report.window = window;

    struct Root {
        double e;
        Parity parity;
    };
    std::vector<Root> roots;
    for (Parity parity : opts.parities) {
        const auto f = [&](double e) { return match_mismatch(e, m_bar, v_bar, parity, opts.solver); };
        for (double e : find_roots(f, window, opts.grid_n, {opts.tol}, opts.threads)) {
            roots.push_back({e, parity});
        }
    }
    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) { return a.e < b.e; });

    for (std::size_t i = 1; i < roots.size(); ++i) {
        if (roots[i].e - roots[i - 1].e <= 10.0 * opts.tol) {
            report.warnings.push_back("root separation: levels " + std::to_string(i - 1) + " and " +
                                      std::to_string(i) + " lie within 10 tol");
        }
    }

    bool any_series = false, any_ode = false;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        BoundState st = build_state(roots[i].e, m_bar, v_bar, roots[i].parity, opts);
        st.n = static_cast<int>(i);
        (st.method == InteriorMethod::kummer_series ? any_series : any_ode) = true;
        report.states.push_back(std::move(st));
    }

    for (std::size_t i = 0; i < report.states.size(); ++i) {
        const Parity expected = i % 2 == 0 ? Parity::even : Parity::odd;
        if (report.states[i].parity != expected) {
            report.warnings.push_back("parity ordering is not interlaced starting from level " +
                                      std::to_string(i));
            break;
        }
    }

    if (any_series && any_ode) {
        report.method = "pcf-kummer+pcf-ode";
    } else if (any_ode) {
        report.method = "pcf-ode";
    } else {
        report.method = "pcf-kummer";
    }
    return report;
}

} // namespace kgwell
