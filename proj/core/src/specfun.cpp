#include "kgwell/specfun.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "kgwell/errors.hpp"
#include "kgwell/ode.hpp"

namespace kgwell {

namespace {

using real_ld = long double;
using complex_ld = std::complex<long double>;

constexpr int series_cap = 500;
constexpr real_ld series_rel_stop = 1e-17L;
constexpr int series_quiet_terms = 3;
constexpr double realness_tol = 1e-10;

// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(real_ld x) {
        const real_ld t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            carry_ += (sum_ - t) + x;
        } else {
            carry_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    real_ld value() const { return sum_ + carry_; }

private:
    real_ld sum_ = 0;
    real_ld carry_ = 0;
};

class CompensatedComplexSum {
public:
    void add(complex_ld x) {
        re_.add(x.real());
        im_.add(x.imag());
    }
    complex_ld value() const { return {re_.value(), im_.value()}; }

private:
    CompensatedSum re_;
    CompensatedSum im_;
};

struct SeriesResult {
    complex_ld value;
    complex_ld derivative;
};

bool is_pole(ComplexValue b) {
    return b.imag() == 0.0 && b.real() <= 0.0 && b.real() == std::round(b.real());
}

void check_arguments(ComplexValue a, ComplexValue b, ComplexValue z) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) || !std::isfinite(b.real()) ||
        !std::isfinite(b.imag()) || !std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw domain_error("kummer_m: non-finite argument");
    }
    if (is_pole(b)) {
        throw domain_error("kummer_m: b is zero or a negative integer");
    }
    if (std::abs(z) > kummer_z_max) {
        throw domain_error("kummer_m: |z| = " + std::to_string(std::abs(z)) +
                           " exceeds the series limit " + std::to_string(kummer_z_max));
    }
}

// Sum M(a,b,z) and dM/dz = sum_n (a)_{n+1}/(b)_{n+1} z^n/n! side by side.
SeriesResult kummer_series(complex_ld a, complex_ld b, complex_ld z) {
    CompensatedComplexSum sum;
    CompensatedComplexSum dsum;
    complex_ld term = 1;
    complex_ld dterm = a / b;
    sum.add(term);
    dsum.add(dterm);

    int quiet = 0;
    for (int n = 0; n < series_cap; ++n) {
        const real_ld nn = static_cast<real_ld>(n);
        term *= (a + nn) / (b + nn) * z / (nn + 1);
        dterm *= (a + nn + 1.0L) / (b + nn + 1.0L) * z / (nn + 1);
        sum.add(term);
        dsum.add(dterm);

        const bool small = std::abs(term) <= series_rel_stop * std::abs(sum.value()) &&
                           std::abs(dterm) <= series_rel_stop * std::abs(dsum.value());
        quiet = small ? quiet + 1 : 0;
        if (quiet >= series_quiet_terms) {
            return {sum.value(), dsum.value()};
        }
    }
    throw accuracy_error("kummer_m", "series did not converge within " +
                                         std::to_string(series_cap) + " terms",
                         static_cast<double>(std::abs(sum.value())),
                         static_cast<double>(std::abs(term)));
}

SeriesResult kummer_transformed(ComplexValue a, ComplexValue b, ComplexValue z) {
    check_arguments(a, b, z);
    const complex_ld al(a.real(), a.imag());
    const complex_ld bl(b.real(), b.imag());
    const complex_ld zl(z.real(), z.imag());
    if (z.real() >= 0.0) {
        return kummer_series(al, bl, zl);
    }
    // M(a,b,z) = e^z M(b-a,b,-z);  dM/dz = e^z (M - M')(b-a,b,-z).
    const SeriesResult r = kummer_series(bl - al, bl, -zl);
    const complex_ld ez = std::exp(zl);
    return {ez * r.value, ez * (r.value - r.derivative)};
}

ComplexValue to_double(complex_ld v, const char* op) {
    const ComplexValue out(static_cast<double>(v.real()), static_cast<double>(v.imag()));
    if (!std::isfinite(out.real()) || !std::isfinite(out.imag())) {
        throw accuracy_error(op, "non-finite result");
    }
    return out;
}

double checked_real(complex_ld v, const char* op) {
    const double re = static_cast<double>(v.real());
    const double im = static_cast<double>(v.imag());
    if (!std::isfinite(re) || !std::isfinite(im)) {
        throw accuracy_error(op, "non-finite result");
    }
    if (std::abs(im) > realness_tol * (1.0 + std::abs(re))) {
        throw accuracy_error(op, "imaginary residue " + std::to_string(im) + " above tolerance",
                             re, std::abs(im));
    }
    return re;
}

} // namespace

KummerValue kummer_m_full(ComplexValue a, ComplexValue b, ComplexValue z) {
    const SeriesResult r = kummer_transformed(a, b, z);
    return {to_double(r.value, "kummer_m"), to_double(r.derivative, "kummer_m")};
}

ComplexValue kummer_m(ComplexValue a, ComplexValue b, ComplexValue z) {
    return kummer_m_full(a, b, z).value;
}

ComplexValue kummer_m_series(ComplexValue a, ComplexValue b, ComplexValue z) {
    check_arguments(a, b, z);
    const SeriesResult r = kummer_series({a.real(), a.imag()}, {b.real(), b.imag()},
                                         {z.real(), z.imag()});
    return to_double(r.value, "kummer_m_series");
}

PcfValues pcf_pair(double b, double rho) {
    if (!std::isfinite(b) || !std::isfinite(rho)) {
        throw domain_error("pcf: non-finite argument");
    }
    if (std::abs(rho) > pcf_rho_max) {
        throw domain_error("pcf: |rho| = " + std::to_string(std::abs(rho)) +
                           " exceeds the series limit; use pcf_via_ode");
    }
    const real_ld r = rho;
    const real_ld half_rho2 = r * r / 2;
    const complex_ld z(0, half_rho2);
    const complex_ld dz_drho(0, r);
    const complex_ld phase = std::exp(complex_ld(0, -half_rho2 / 2));
    const complex_ld dphase = complex_ld(0, -r / 2); // phase'/phase

    const SeriesResult me = kummer_series(complex_ld(0.25L, -b / 2.0L), 0.5L, z);
    const SeriesResult mo = kummer_series(complex_ld(0.75L, -b / 2.0L), 1.5L, z);

    const complex_ld ue = phase * me.value;
    const complex_ld due = phase * (dphase * me.value + dz_drho * me.derivative);
    const complex_ld vo = phase * mo.value; // u_o / rho
    const complex_ld uo = r * vo;
    const complex_ld duo = vo + r * phase * (dphase * mo.value + dz_drho * mo.derivative);

    return {checked_real(ue, "pcf_even"), checked_real(due, "pcf_even_deriv"),
            checked_real(uo, "pcf_odd"), checked_real(duo, "pcf_odd_deriv")};
}

double pcf_even(double b, double rho) { return pcf_pair(b, rho).even; }
double pcf_odd(double b, double rho) { return pcf_pair(b, rho).odd; }
double pcf_even_deriv(double b, double rho) { return pcf_pair(b, rho).even_deriv; }
double pcf_odd_deriv(double b, double rho) { return pcf_pair(b, rho).odd_deriv; }

PcfValues pcf_via_ode(double b, double rho, double step) {
    if (!(step > 0.0)) {
        throw config_error("pcf_via_ode: step must be positive");
    }
    const auto q = [b](double x) { return x * x / 4.0 - b; };
    const OdeState e = integrate_linear_rk4(q, 0.0, rho, {1.0, 0.0}, step);
    const OdeState o = integrate_linear_rk4(q, 0.0, rho, {0.0, 1.0}, step);
    if (!std::isfinite(e.psi) || !std::isfinite(e.dpsi) || !std::isfinite(o.psi) ||
        !std::isfinite(o.dpsi)) {
        throw accuracy_error("pcf_via_ode", "integration overflow");
    }
    return {e.psi, e.dpsi, o.psi, o.dpsi};
}

AiryPair airy_pair(double t) {
    if (!std::isfinite(t) || std::abs(t) > airy_t_max) {
        throw domain_error("airy_pair: |t| exceeds the series limit");
    }
    const real_ld tl = t;
    const real_ld t2 = tl * tl;
    const real_ld t3 = t2 * tl;

    CompensatedSum u1, du1, u2, du2;
    real_ld a = 1;  // c_{3k} t^{3k}
    real_ld da = 0; // 3k c_{3k} t^{3k-1}
    real_ld b = tl; // c_{3k+1} t^{3k+1}
    real_ld db = 1; // (3k+1) c_{3k+1} t^{3k}
    int quiet = 0;
    for (int k = 0; k < series_cap; ++k) {
        u1.add(a);
        du1.add(da);
        u2.add(b);
        du2.add(db);
        const real_ld kk = 3.0L * k;
        da = a * t2 / (kk + 2);
        db = b * t2 / (kk + 3);
        a *= t3 / ((kk + 3) * (kk + 2));
        b *= t3 / ((kk + 4) * (kk + 3));

        const auto small = [](real_ld term, const CompensatedSum& s) {
            return std::abs(term) <= series_rel_stop * std::abs(s.value());
        };
        quiet = (small(a, u1) && small(da, du1) && small(b, u2) && small(db, du2)) ? quiet + 1 : 0;
        if (quiet >= series_quiet_terms) {
            const AiryPair out{static_cast<double>(u1.value()), static_cast<double>(du1.value()),
                               static_cast<double>(u2.value()), static_cast<double>(du2.value())};
            if (!std::isfinite(out.u1) || !std::isfinite(out.du1) || !std::isfinite(out.u2) ||
                !std::isfinite(out.du2)) {
                throw accuracy_error("airy_pair", "series overflow");
            }
            return out;
        }
    }
    throw accuracy_error("airy_pair", "series did not converge", static_cast<double>(u1.value()),
                         static_cast<double>(std::abs(a)));
}

} // namespace kgwell
