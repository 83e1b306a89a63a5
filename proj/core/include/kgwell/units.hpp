#pragma once

// Conversion between laboratory units (MeV, fm) and the dimensionless system
// used everywhere inside the library: lengths in units of the well half-range a,
// energies in units of hbar*c/a.

namespace kgwell {

inline constexpr double codata_hbar_c = 197.3269804; // MeV fm

struct PhysicalParams {
    double mass_energy = 0.0; ///< rest energy m c^2 [MeV]
    double well_depth = 0.0;  ///< V0 [MeV]
    double half_range = 0.0;  ///< a [fm]
    double hbar_c = codata_hbar_c;
};

struct DimensionlessParams {
    double m_bar = 0.0;
    double v_bar = 0.0;
};

/// Throws invalid_parameter naming the first non-positive field.
void validate(const PhysicalParams& p);
void validate(const DimensionlessParams& d);

DimensionlessParams to_dimensionless(const PhysicalParams& p);

/// Inverse of to_dimensionless for a given half-range and hbar_c.
PhysicalParams to_physical(const DimensionlessParams& d, double half_range,
                           double hbar_c = codata_hbar_c);

/// Energy unit hbar*c/a in MeV.
double energy_unit(const PhysicalParams& p);

double energy_to_dimensionless(double energy_mev, const PhysicalParams& p);
double energy_to_physical(double e_bar, const PhysicalParams& p);

} // namespace kgwell
