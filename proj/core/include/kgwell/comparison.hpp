#pragma once

#include <optional>
#include <vector>

#include "kgwell/eigensolver.hpp"
#include "kgwell/oracle.hpp"

namespace kgwell {

/// One analytic level next to its oracle counterpart (matched by position in
/// the ascending list).
struct ValidationRow {
    int n = 0;
    std::optional<BoundState> analytic;
    std::optional<OracleLevel> oracle;

    /// |E_analytic - E_oracle|, or +inf when one side is missing.
    double delta() const;
    bool parity_match() const;
    bool nodes_match() const;
};

struct ValidationResult {
    SpectrumReport report;
    std::vector<OracleLevel> oracle;
    std::vector<ValidationRow> rows;

    double max_delta() const;
    bool counts_match() const { return report.states.size() == oracle.size(); }
    /// All counts, parities and node counts agree and every delta <= tol.
    bool passed(double tol = 1e-6) const;
};

ValidationResult validate_spectrum(double m_bar, double v_bar, const SpectrumOptions& analytic = {},
                                   const ShootingConfig& oracle = {});

struct NonrelRow {
    double v_bar;
    double kg_binding;          ///< m - E_0
    double schrodinger_binding; ///< -eps_0
    double rel_diff;            ///< |kg - schrodinger| / schrodinger
};

/// Ground-state binding energies of both formalisms. Returns nullopt when
/// either solver finds no bound state.
std::optional<NonrelRow> nonrel_comparison(double m_bar, double v_bar,
                                           const SpectrumOptions& analytic = {},
                                           const ShootingConfig& shooting = {});

} // namespace kgwell
