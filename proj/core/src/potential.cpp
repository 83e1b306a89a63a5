#include "kgwell/potential.hpp"

#include <cmath>
#include <string>

#include "kgwell/errors.hpp"

namespace kgwell {

TriangularWell::TriangularWell(double depth) : v_bar(depth) {
    if (!(depth > 0.0) || !std::isfinite(depth)) {
        throw invalid_parameter("v_bar", "well depth must be finite and positive");
    }
}

double potential_value(double y, const TriangularWell& w) {
    const double r = std::abs(y);
    return r <= 1.0 ? -w.v_bar * (1.0 - r) : 0.0;
}

double effective_energy(double e_bar, double m_bar) { return e_bar * e_bar - m_bar * m_bar; }

double effective_potential(double y, double e_bar, const TriangularWell& w) {
    const double v = potential_value(y, w);
    return 2.0 * e_bar * v - v * v;
}

double decay_constant(double e_bar, double m_bar) {
    if (!(std::abs(e_bar) < m_bar)) {
        throw not_bound_state("energy " + std::to_string(e_bar) +
                              " outside the bound-state window (-m, m) with m = " +
                              std::to_string(m_bar));
    }
    // (m - E)(m + E) keeps full relative precision near threshold.
    return std::sqrt((m_bar - e_bar) * (m_bar + e_bar));
}

} // namespace kgwell
