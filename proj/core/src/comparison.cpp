#include "kgwell/comparison.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kgwell {

double ValidationRow::delta() const {
    if (!analytic || !oracle) return std::numeric_limits<double>::infinity();
    return std::abs(analytic->e_bar - oracle->e_bar);
}

bool ValidationRow::parity_match() const {
    return analytic && oracle && analytic->parity == oracle->parity;
}

bool ValidationRow::nodes_match() const {
    return analytic && oracle && analytic->nodes == oracle->nodes;
}

double ValidationResult::max_delta() const {
    double worst = 0.0;
    for (const auto& r : rows) worst = std::max(worst, r.delta());
    return worst;
}

bool ValidationResult::passed(double tol) const {
    if (!counts_match()) return false;
    return std::all_of(rows.begin(), rows.end(), [tol](const ValidationRow& r) {
        return r.delta() <= tol && r.parity_match() && r.nodes_match();
    });
}

ValidationResult validate_spectrum(double m_bar, double v_bar, const SpectrumOptions& analytic,
                                   const ShootingConfig& oracle) {
    ValidationResult out;
    out.report = find_spectrum(m_bar, v_bar, analytic);

    ShootingConfig cfg = oracle;
    if (!cfg.window) cfg.window = out.report.window;
    out.oracle = kg_shoot_spectrum(m_bar, v_bar, cfg);

    const std::size_t n = std::max(out.report.states.size(), out.oracle.size());
    for (std::size_t i = 0; i < n; ++i) {
        ValidationRow row;
        row.n = static_cast<int>(i);
        if (i < out.report.states.size()) row.analytic = out.report.states[i];
        if (i < out.oracle.size()) row.oracle = out.oracle[i];
        out.rows.push_back(std::move(row));
    }
    out.report.oracle_deltas.clear();
    for (const auto& r : out.rows) {
        if (r.analytic) out.report.oracle_deltas.push_back(r.delta());
    }
    return out;
}

std::optional<NonrelRow> nonrel_comparison(double m_bar, double v_bar,
                                           const SpectrumOptions& analytic,
                                           const ShootingConfig& shooting) {
    const SpectrumReport kg = find_spectrum(m_bar, v_bar, analytic);
    const auto nr = schrodinger_spectrum(m_bar, v_bar, shooting);
    if (kg.states.empty() || nr.empty()) return std::nullopt;

    NonrelRow row{};
    row.v_bar = v_bar;
    // Ground state: the highest binding among positive-energy levels.
    const auto ground = std::find_if(kg.states.begin(), kg.states.end(),
                                     [](const BoundState& s) { return s.e_bar > 0.0; });
    if (ground == kg.states.end()) return std::nullopt;
    row.kg_binding = m_bar - ground->e_bar;
    row.schrodinger_binding = nr.front().binding;
    row.rel_diff = std::abs(row.kg_binding - row.schrodinger_binding) / row.schrodinger_binding;
    return row;
}

} // namespace kgwell
