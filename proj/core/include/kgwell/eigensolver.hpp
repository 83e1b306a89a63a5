#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kgwell/roots.hpp"
#include "kgwell/specfun.hpp"

namespace kgwell {

enum class Parity { even, odd };

std::string_view to_string(Parity p);
Parity parity_from_string(std::string_view s);

/// Coefficients of the interior equation psi'' + (A y^2 + B y + C) psi = 0 on
/// 0 <= y <= 1, together with the completed-square constants
///   D = (B^2 - 4AC) / (4A),   b = (B^2 - 4AC) / (4A)^{3/2}.
struct InteriorCoeffs {
    double a_coef;
    double b_coef;
    double c_coef;
    double d_coef;
    double b_std;
};

/// Throws internal_consistency if b_std differs from m^2/(2 V0) or
/// d_coef from b_std sqrt(4A) by more than 1e-12 relative.
InteriorCoeffs interior_coeffs(double e_bar, double m_bar, double v_bar);

struct RhoMap {
    double z;
    double rho;
    double drho_dy; ///< constant sqrt(2 V0)
};

/// y -> z = 2 sqrt(A) (y + B/(2A)) -> rho = z / (4A)^{1/4}.
RhoMap rho_of_y(double y, const InteriorCoeffs& c);

/// How the interior solution is evaluated.
enum class InteriorMethod {
    kummer_series, ///< parabolic-cylinder pair from the confluent series
    pcf_ode,       ///< standard equation integrated in rho (large |rho| or ill-conditioned basis)
};

std::string_view to_string(InteriorMethod m);

struct SolverOptions {
    /// Basis condition number above which the series route is abandoned.
    double max_basis_condition = 1e6;
    /// Integration step in y for the pcf_ode route (converted to a rho step).
    double ode_step = 1e-4;
};

/// Interior wavefunction on [0, 1] for one trial energy and parity, normalized
/// to psi(0) = 1 (even) or psi'(0) = 1 (odd).
class InteriorSolution {
public:
    InteriorSolution(double e_bar, double m_bar, double v_bar, Parity parity,
                     const SolverOptions& opts = {});

    struct Value {
        double psi;
        double dpsi_dy;
    };

    /// 0 <= y <= 1.
    Value at(double y) const;

    InteriorMethod method() const { return method_; }
    const InteriorCoeffs& coeffs() const { return coeffs_; }
    Parity parity() const { return parity_; }

private:
    Value at_series(double rho) const;
    Value at_ode(double rho) const;

    InteriorCoeffs coeffs_;
    Parity parity_;
    double rho0_;
    double drho_dy_;
    double c_even_ = 0.0;
    double c_odd_ = 0.0;
    InteriorMethod method_ = InteriorMethod::kummer_series;
    SolverOptions opts_;
};

struct InteriorValue {
    double psi;
    double dpsi_dy;
};

InteriorValue interior_solution(double y, double e_bar, double m_bar, double v_bar, Parity parity,
                                const SolverOptions& opts = {});

/// F(E) = psi'(1) + alpha psi(1); zero iff the interior matches e^{-alpha y} at the edge.
double match_mismatch(double e_bar, double m_bar, double v_bar, Parity parity,
                      const SolverOptions& opts = {});

enum class NormKind { l2, kg_charge };

std::string_view to_string(NormKind k);

enum class Region { left_tail, well, right_tail };

std::string_view to_string(Region r);

struct Sample {
    double y;
    double psi;
    double dpsi_dy;
    Region region;
};

struct BoundState {
    int n = 0;
    double e_bar = 0.0;
    Parity parity = Parity::even;
    int nodes = 0;
    double alpha_bar = 0.0;
    /// Display grid over [-y_plot, y_plot].
    std::vector<Sample> samples;
    /// Uniform grid over [-1, 1] with y = 0 as a node; used for quadrature and node counting.
    std::vector<Sample> well_grid;
    /// psi = c1 e^{alpha y} for y <= -1 and d1 e^{-alpha y} for y >= 1.
    double c1 = 0.0;
    double d1 = 0.0;
    /// Interior edge values before assembly, kept to measure the matching residual.
    double psi_edge = 0.0;
    double dpsi_edge = 0.0;
    NormKind norm_kind = NormKind::l2;
    /// Overall factor N applied to the unit-normalized-at-origin solution.
    double normalization = 1.0;
    /// Sign of the KG charge integral (E - V)|psi|^2, +1 or -1.
    int charge_sign = 1;
    InteriorMethod method = InteriorMethod::kummer_series;

    bool antiparticle_sector() const { return e_bar < 0.0; }
};

struct SpectrumOptions {
    std::vector<Parity> parities{Parity::even, Parity::odd};
    std::optional<Window> window; ///< default (-m + 1e-6, m - 1e-6)
    std::size_t grid_n = 2000;
    double tol = 1e-10;
    std::size_t samples = 501;
    double y_plot = 1.5;
    std::size_t well_intervals = 1000;
    NormKind norm = NormKind::l2;
    SolverOptions solver;
    unsigned threads = 0;
};

struct SpectrumReport {
    double m_bar = 0.0;
    double v_bar = 0.0;
    std::vector<BoundState> states;
    double tol = 0.0;
    std::size_t grid_n = 0;
    Window window{0.0, 0.0};
    std::string method;
    std::vector<std::string> warnings;
    /// Filled by validation: |E_analytic - E_oracle| per state.
    std::vector<double> oracle_deltas;
};

inline constexpr double window_margin = 1e-9;

/// Scan, bracket and refine every bound state in the window, then assemble
/// and normalize each state.
SpectrumReport find_spectrum(double m_bar, double v_bar, const SpectrumOptions& opts = {});

/// Assemble one state at a converged eigenvalue (samples, tails, nodes, norm).
BoundState build_state(double e_bar, double m_bar, double v_bar, Parity parity,
                       const SpectrumOptions& opts = {});

/// Number of strict sign changes of psi over samples with |y| < 1,
/// ignoring |psi| below 1e-12.
int count_nodes(const std::vector<Sample>& samples);

/// Rescale so that the chosen norm is 1 (for kg_charge: |charge| = 1, sign kept).
/// Exterior tails are integrated analytically, the interior by composite Simpson
/// on well_grid. Throws degenerate_error on a zero norm.
BoundState normalize(BoundState state, NormKind kind, double v_bar);

/// Norm integrals of a state as it stands.
double l2_norm_squared(const BoundState& state);
double kg_charge(const BoundState& state, double v_bar);

} // namespace kgwell
