#include "kgwell/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "kgwell/errors.hpp"
#include "kgwell/ode.hpp"
#include "kgwell/specfun.hpp"

namespace kgwell {

namespace {

OdeState parity_start(Parity p) { return p == Parity::even ? OdeState{1.0, 0.0} : OdeState{0.0, 1.0}; }

int full_line_nodes(int half_nodes, Parity p) {
    return 2 * half_nodes + (p == Parity::odd ? 1 : 0);
}

// Counts sign changes of psi at integration points strictly inside (0, 1).
class NodeCounter {
public:
    void operator()(double x, const OdeState& s) {
        if (!(x > 0.0 && x < 1.0) || s.psi == 0.0) return;
        const int sign = s.psi > 0.0 ? 1 : -1;
        if (last_ != 0 && sign != last_) ++count_;
        last_ = sign;
    }
    int count() const { return count_; }

private:
    int last_ = 0;
    int count_ = 0;
};

template <class Q>
ShootResult shoot(Q&& q, Parity parity, const ShootingConfig& cfg) {
    NodeCounter counter;
    const OdeState end =
        integrate_linear_rk4(q, 0.0, 1.0, parity_start(parity), cfg.step, std::ref(counter));
    if (!std::isfinite(end.psi) || !std::isfinite(end.dpsi)) {
        throw accuracy_error("shooting", "integration overflow");
    }
    return {end.psi, end.dpsi, counter.count()};
}

ShootResult schrodinger_shoot(double eps, double m_bar, double v_bar, Parity parity,
                              const ShootingConfig& cfg) {
    const auto q = [=](double y) { return 2.0 * m_bar * (eps + v_bar * (1.0 - y)); };
    return shoot(q, parity, cfg);
}

double nonrel_decay(double eps, double m_bar) {
    if (!(eps < 0.0)) {
        throw not_bound_state("non-relativistic energy must be negative");
    }
    return std::sqrt(-2.0 * m_bar * eps);
}

struct AiryBasis {
    double k;
    double y0;
    double c1;
    double c2;

    double psi(double y) const {
        const AiryPair p = airy_pair(k * (y - y0));
        return c1 * p.u1 + c2 * p.u2;
    }
    double dpsi(double y) const {
        const AiryPair p = airy_pair(k * (y - y0));
        return k * (c1 * p.du1 + c2 * p.du2);
    }
};

AiryBasis airy_basis(double eps, double m_bar, double v_bar, Parity parity) {
    AiryBasis b{};
    b.k = std::cbrt(2.0 * m_bar * v_bar);
    b.y0 = 1.0 + eps / v_bar;
    const AiryPair p0 = airy_pair(-b.k * b.y0);
    double w = 0.0;
    if (parity == Parity::even) {
        b.c1 = p0.du2;
        b.c2 = -p0.du1;
        w = b.c1 * p0.u1 + b.c2 * p0.u2;
    } else {
        b.c1 = -p0.u2;
        b.c2 = p0.u1;
        w = b.k * (b.c1 * p0.du1 + b.c2 * p0.du2);
    }
    if (w == 0.0 || !std::isfinite(w)) {
        throw degenerate_error("airy basis: singular parity system");
    }
    b.c1 /= w;
    b.c2 /= w;
    return b;
}

void require_positive_depth(double v_bar) {
    if (!(v_bar > 0.0) || !std::isfinite(v_bar)) {
        throw invalid_parameter("v_bar", "must be finite and positive");
    }
}

void require_positive_mass(double m_bar) {
    if (!(m_bar > 0.0) || !std::isfinite(m_bar)) {
        throw invalid_parameter("m_bar", "must be finite and positive");
    }
}

} // namespace

void validate(const ShootingConfig& cfg) {
    if (!(cfg.step >= 1e-6 && cfg.step <= 1e-2)) {
        throw config_error("shooting step must lie in [1e-6, 1e-2]");
    }
    if (cfg.grid_n < 16) {
        throw config_error("shooting grid_n must be at least 16");
    }
    if (!(cfg.tol > 0.0)) {
        throw config_error("shooting tol must be positive");
    }
}

ShootResult kg_shoot(double e_bar, double m_bar, double v_bar, Parity parity,
                     const ShootingConfig& cfg) {
    validate(cfg);
    // (E - V(y))^2 - m^2 with V(y) = -v_bar (1 - y) on [0, 1].
    const auto q = [=](double y) {
        const double kinetic = e_bar + v_bar * (1.0 - y);
        return kinetic * kinetic - m_bar * m_bar;
    };
    return shoot(q, parity, cfg);
}

double kg_shoot_mismatch(double e_bar, double m_bar, double v_bar, Parity parity,
                         const ShootingConfig& cfg) {
    if (!(std::abs(e_bar) < m_bar)) {
        throw not_bound_state("kg_shoot_mismatch: |E| must be below m");
    }
    const double alpha = std::sqrt((m_bar - e_bar) * (m_bar + e_bar));
    const ShootResult r = kg_shoot(e_bar, m_bar, v_bar, parity, cfg);
    return r.dpsi + alpha * r.psi;
}

std::vector<OracleLevel> kg_shoot_spectrum(double m_bar, double v_bar, const ShootingConfig& cfg) {
    validate(cfg);
    require_positive_mass(m_bar);
    const Window window = cfg.window.value_or(Window{-m_bar + 1e-6, m_bar - 1e-6});
    if (!(window.lo < window.hi) || window.lo <= -m_bar || window.hi >= m_bar) {
        throw config_error("kg_shoot_spectrum: window must lie inside (-m, m)");
    }
    std::vector<OracleLevel> levels;
    for (Parity parity : {Parity::even, Parity::odd}) {
        const auto f = [&](double e) { return kg_shoot_mismatch(e, m_bar, v_bar, parity, cfg); };
        for (double e : find_roots(f, window, cfg.grid_n, {cfg.tol}, cfg.threads)) {
            const ShootResult r = kg_shoot(e, m_bar, v_bar, parity, cfg);
            levels.push_back({e, parity, full_line_nodes(r.half_nodes, parity)});
        }
    }
    std::sort(levels.begin(), levels.end(),
              [](const OracleLevel& a, const OracleLevel& b) { return a.e_bar < b.e_bar; });
    return levels;
}

double schrodinger_mismatch(double eps, double m_bar, double v_bar, Parity parity,
                            const ShootingConfig& cfg) {
    validate(cfg);
    const double kappa = nonrel_decay(eps, m_bar);
    const ShootResult r = schrodinger_shoot(eps, m_bar, v_bar, parity, cfg);
    return r.dpsi + kappa * r.psi;
}

double schrodinger_airy_mismatch(double eps, double m_bar, double v_bar, Parity parity) {
    require_positive_depth(v_bar);
    const double kappa = nonrel_decay(eps, m_bar);
    const AiryBasis b = airy_basis(eps, m_bar, v_bar, parity);
    return b.dpsi(1.0) + kappa * b.psi(1.0);
}

std::vector<NonrelLevel> schrodinger_spectrum(double m_bar, double v_bar, const ShootingConfig& cfg,
                                              SchrodingerPath path) {
    validate(cfg);
    require_positive_mass(m_bar);
    require_positive_depth(v_bar);
    const Window window = cfg.window.value_or(Window{-v_bar * (1.0 - 1e-9), -1e-13});
    if (!(window.lo < window.hi) || window.hi >= 0.0) {
        throw config_error("schrodinger_spectrum: window must lie below zero");
    }

    struct Level {
        double eps;
        Parity parity;
        int nodes;
    };
    std::vector<Level> levels;
    for (Parity parity : {Parity::even, Parity::odd}) {
        std::vector<double> roots;
        if (path == SchrodingerPath::shooting) {
            const auto f = [&](double e) { return schrodinger_mismatch(e, m_bar, v_bar, parity, cfg); };
            roots = find_roots(f, window, cfg.grid_n, {cfg.tol}, cfg.threads);
        } else {
            const auto f = [&](double e) { return schrodinger_airy_mismatch(e, m_bar, v_bar, parity); };
            roots = find_roots(f, window, cfg.grid_n, {cfg.tol}, cfg.threads);
        }
        for (double eps : roots) {
            int half_nodes = 0;
            if (path == SchrodingerPath::shooting) {
                half_nodes = schrodinger_shoot(eps, m_bar, v_bar, parity, cfg).half_nodes;
            } else {
                const AiryBasis b = airy_basis(eps, m_bar, v_bar, parity);
                constexpr int probe = 4000;
                int last = 0;
                for (int i = 1; i < probe; ++i) {
                    const double psi = b.psi(static_cast<double>(i) / probe);
                    if (psi == 0.0) continue;
                    const int sign = psi > 0.0 ? 1 : -1;
                    if (last != 0 && sign != last) ++half_nodes;
                    last = sign;
                }
            }
            levels.push_back({eps, parity, full_line_nodes(half_nodes, parity)});
        }
    }
    std::sort(levels.begin(), levels.end(), [](const Level& a, const Level& b) { return a.eps < b.eps; });

    std::vector<NonrelLevel> out;
    out.reserve(levels.size());
    for (const Level& l : levels) out.push_back({-l.eps, l.parity, l.nodes});
    return out;
}

} // namespace kgwell
