#include "kgwell/units.hpp"

#include <cmath>

#include "kgwell/errors.hpp"

namespace kgwell {

namespace {

void require_positive(double value, const char* field) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw invalid_parameter(field, "must be finite and positive");
    }
}

} // namespace

void validate(const PhysicalParams& p) {
    require_positive(p.mass_energy, "mass_energy");
    require_positive(p.well_depth, "well_depth");
    require_positive(p.half_range, "half_range");
    require_positive(p.hbar_c, "hbar_c");
}

void validate(const DimensionlessParams& d) {
    require_positive(d.m_bar, "m_bar");
    require_positive(d.v_bar, "v_bar");
}

double energy_unit(const PhysicalParams& p) { return p.hbar_c / p.half_range; }

DimensionlessParams to_dimensionless(const PhysicalParams& p) {
    validate(p);
    return {p.mass_energy * p.half_range / p.hbar_c, p.well_depth * p.half_range / p.hbar_c};
}

PhysicalParams to_physical(const DimensionlessParams& d, double half_range, double hbar_c) {
    validate(d);
    require_positive(half_range, "half_range");
    require_positive(hbar_c, "hbar_c");
    return {d.m_bar * hbar_c / half_range, d.v_bar * hbar_c / half_range, half_range, hbar_c};
}

double energy_to_dimensionless(double energy_mev, const PhysicalParams& p) {
    validate(p);
    return energy_mev * p.half_range / p.hbar_c;
}

double energy_to_physical(double e_bar, const PhysicalParams& p) {
    validate(p);
    return e_bar * p.hbar_c / p.half_range;
}

} // namespace kgwell
