#pragma once

#include <optional>
#include <vector>

#include "kgwell/eigensolver.hpp"
#include "kgwell/roots.hpp"

// Reference solvers that integrate the half-line problem directly with
// fixed-step RK4. They share no code path with the special-function route.

namespace kgwell {

struct ShootingConfig {
    double step = 1e-4;
    std::optional<Window> window;
    std::size_t grid_n = 2000;
    double tol = 1e-10;
    unsigned threads = 0;
};

/// Throws config_error unless step is in [1e-6, 1e-2] and grid_n >= 16.
void validate(const ShootingConfig& cfg);

struct ShootResult {
    double psi;
    double dpsi;
    int half_nodes; ///< sign changes of psi strictly inside (0, 1)
};

/// Integrates psi'' + ((E - V(y))^2 - m^2) psi = 0 over [0, 1] from parity data at y = 0.
/// v_bar may be negative (repulsive apex); the potential enters only through (E - V)^2.
ShootResult kg_shoot(double e_bar, double m_bar, double v_bar, Parity parity,
                     const ShootingConfig& cfg = {});

/// psi'(1) + alpha psi(1) for the directly integrated solution.
double kg_shoot_mismatch(double e_bar, double m_bar, double v_bar, Parity parity,
                         const ShootingConfig& cfg = {});

struct OracleLevel {
    double e_bar;
    Parity parity;
    int nodes;
};

/// Scan-bracket-refine over kg_shoot_mismatch; sorted ascending in E.
std::vector<OracleLevel> kg_shoot_spectrum(double m_bar, double v_bar,
                                           const ShootingConfig& cfg = {});

enum class SchrodingerPath { shooting, airy };

/// Mismatch for psi'' + 2m (eps - V(y)) psi = 0 with exterior decay sqrt(-2 m eps).
double schrodinger_mismatch(double eps, double m_bar, double v_bar, Parity parity,
                            const ShootingConfig& cfg = {});

/// Same mismatch from the linear-potential pair w'' = t w, t = (2 m V0)^{1/3} (y - 1 - eps/V0).
double schrodinger_airy_mismatch(double eps, double m_bar, double v_bar, Parity parity);

struct NonrelLevel {
    double binding;  ///< -eps > 0
    Parity parity;
    int nodes;
};

/// Non-relativistic levels of the same well, sorted by increasing energy
/// (decreasing binding). Default window: eps in (-V0 (1 - 1e-9), -1e-13).
std::vector<NonrelLevel> schrodinger_spectrum(double m_bar, double v_bar,
                                              const ShootingConfig& cfg = {},
                                              SchrodingerPath path = SchrodingerPath::shooting);

} // namespace kgwell
