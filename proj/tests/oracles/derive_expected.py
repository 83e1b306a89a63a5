"""Independent high-precision oracle for the frozen expected values in the unit tests.

Uses mpmath's Taylor-series ODE integrator (odefun) and findroot; shares no code
with the C++ library. Run:  python3 tests/oracles/derive_expected.py
"""
import mpmath as mp

mp.mp.dps = 30


def integrate(q, x0, x1, psi0, dpsi0):
    """psi'' = -q(x) psi from x0 to x1; returns (psi, dpsi) at x1."""
    sol = mp.odefun(lambda x, y: [y[1], -q(x) * y[0]], x0, [mp.mpf(psi0), mp.mpf(dpsi0)])
    psi, dpsi = sol(x1)
    return psi, dpsi


def pcf(b, rho, even):
    q = lambda r: r * r / 4 - b
    return integrate(q, 0, rho, 1 if even else 0, 0 if even else 1)


def airy_u1(t):
    return integrate(lambda x: -x, 0, t, 1, 0)


def kg_interior(y, e, m, v, even):
    q = lambda x: (e + v * (1 - x)) ** 2 - m * m
    return integrate(q, 0, y, 1 if even else 0, 0 if even else 1)


def kg_mismatch(e, m, v, even):
    psi, dpsi = kg_interior(1, e, m, v, even)
    return dpsi + mp.sqrt(m * m - e * e) * psi


def schrodinger_mismatch(eps, m, v, even):
    q = lambda x: 2 * m * (eps + v * (1 - x))
    psi, dpsi = integrate(q, 0, 1, 1 if even else 0, 0 if even else 1)
    return dpsi + mp.sqrt(-2 * m * eps) * psi


def show(label, value):
    print(f"{label:40s} {mp.nstr(value, 17)}")


show("units m_bar(139.57, a=2)", mp.mpf("139.57") * 2 / mp.mpf("197.3269804"))
show("units v_bar(50, a=2)", mp.mpf(50) * 2 / mp.mpf("197.3269804"))
show("units E(-98.66349, a=1)", mp.mpf("-98.66349") / mp.mpf("197.3269804"))
show("pcf_even(b=0, rho=1)", pcf(0, 1, True)[0])
show("pcf_odd(b=1, rho=0.7)", pcf(1, mp.mpf("0.7"), False)[0])
show("pcf_even_deriv(b=0.5, rho=1)", pcf(mp.mpf("0.5"), 1, True)[1])
show("airy u1(1)", airy_u1(1)[0])
psi, dpsi = kg_interior(mp.mpf("0.5"), mp.mpf("0.3"), 1, 4, True)
show("interior psi(0.5; E=.3,m=1,V=4,even)", psi)
show("interior dpsi(0.5; E=.3,m=1,V=4,even)", dpsi)
e_odd = mp.findroot(lambda e: kg_mismatch(e, 1, 5, False), mp.mpf("0.0357"))
show("KG m=1 V=5 odd eigenvalue", e_odd)
e_even = mp.findroot(lambda e: kg_mismatch(e, 2, 5, True), mp.mpf("-1.446"))
show("KG m=2 V=5 ground eigenvalue", e_even)
eps0 = mp.findroot(lambda e: schrodinger_mismatch(e, 1, 2, True), mp.mpf("-1.0"))
show("Schrodinger m=1 V=2 ground eps", eps0)
