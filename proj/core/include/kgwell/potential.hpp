#pragma once

namespace kgwell {

/// Symmetric triangular well V(y) = -v_bar (1 - |y|) on |y| <= 1, zero outside.
/// Positions are in units of the half-range.
struct TriangularWell {
    double v_bar;

    explicit TriangularWell(double depth);
};

double potential_value(double y, const TriangularWell& w);

/// E_eff = E^2 - m^2.
double effective_energy(double e_bar, double m_bar);

/// V_eff(y) = 2 E V(y) - V(y)^2, so that psi'' + (E_eff - V_eff) psi = 0.
double effective_potential(double y, double e_bar, const TriangularWell& w);

/// Effective view of the vector-coupled equation at a fixed trial energy.
struct EffectiveView {
    double e_bar;
    double m_bar;
    TriangularWell well;

    double e_eff() const { return effective_energy(e_bar, m_bar); }
    double v_eff_at(double y) const { return effective_potential(y, e_bar, well); }
};

/// Exterior decay constant sqrt(m^2 - E^2); throws not_bound_state unless |E| < m.
double decay_constant(double e_bar, double m_bar);

/// True for states in the antiparticle sector (E < 0).
inline bool is_antiparticle_sector(double e_bar) { return e_bar < 0.0; }

} // namespace kgwell
