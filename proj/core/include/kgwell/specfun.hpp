#pragma once

#include <cmath>
#include <complex>

namespace kgwell {

using ComplexValue = std::complex<double>;

/// Largest |z| accepted by the Kummer series. Beyond this the alternating
/// imaginary-argument series loses too many digits in double precision.
inline constexpr double kummer_z_max = 30.0;
/// |rho| bound for the series form of the parabolic-cylinder solutions (rho^2/2 <= z_max).
inline const double pcf_rho_max = std::sqrt(2.0 * kummer_z_max);
/// |t| bound for the Maclaurin form of the linear-potential pair.
inline constexpr double airy_t_max = 8.0;

struct KummerValue {
    ComplexValue value;
    ComplexValue derivative; ///< dM/dz
};

/// Confluent hypergeometric function M(a, b, z), with dM/dz from the term-wise
/// differentiated series. Uses M(a,b,z) = e^z M(b-a,b,-z) when Re z < 0.
/// Throws domain_error at a pole of b or for |z| > kummer_z_max, accuracy_error
/// if the series does not settle within the iteration cap.
KummerValue kummer_m_full(ComplexValue a, ComplexValue b, ComplexValue z);

ComplexValue kummer_m(ComplexValue a, ComplexValue b, ComplexValue z);

/// Plain Maclaurin series without the Kummer transformation.
ComplexValue kummer_m_series(ComplexValue a, ComplexValue b, ComplexValue z);

/// Even and odd solutions of psi'' + (rho^2/4 - b) psi = 0 together with their
/// rho-derivatives. Normalized to u_e(0) = 1, u_e'(0) = 0, u_o(0) = 0, u_o'(0) = 1.
struct PcfValues {
    double even;
    double even_deriv;
    double odd;
    double odd_deriv;
};

/// Series evaluation through
///   u_e = exp(-i rho^2/4) M(1/4 - i b/2, 1/2, i rho^2/2)
///   u_o = rho exp(-i rho^2/4) M(3/4 - i b/2, 3/2, i rho^2/2).
/// Both are real; the imaginary residue is checked against 1e-10 (1 + |u|).
PcfValues pcf_pair(double b, double rho);

double pcf_even(double b, double rho);
double pcf_odd(double b, double rho);
double pcf_even_deriv(double b, double rho);
double pcf_odd_deriv(double b, double rho);

/// Same four values by fourth-order integration of the standard equation from
/// rho = 0. Valid for any rho; cost grows linearly with |rho| / step.
PcfValues pcf_via_ode(double b, double rho, double step = 1e-4);

/// Two solutions of w'' = t w from their Maclaurin series:
/// u1(0) = 1, u1'(0) = 0, u2(0) = 0, u2'(0) = 1 (Wronskian identically 1).
struct AiryPair {
    double u1;
    double du1;
    double u2;
    double du2;
};

AiryPair airy_pair(double t);

} // namespace kgwell
