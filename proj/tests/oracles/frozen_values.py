#!/usr/bin/env python3
"""Independent high-precision reference values for the C++ unit tests.

Every value here comes from mpmath quadrature, numerical differentiation or
brute-force partial sums at 30 digits. None of it reuses the closed forms
being tested. Run it and paste the output into tests/frozen_values.hpp when
a reference needs to change.
"""

from mpmath import mp, mpf, quad, diff, exp, sqrt, pi, sin, cos, inf, gamma, taylor, e, mpc

mp.dps = 30


def dawson_quad(x):
    x = mpf(x)
    return exp(-x * x) * quad(lambda y: exp(y * y), [0, x])


def sg_quad(x):
    return 2 / sqrt(pi) * dawson_quad(x)


def quasi_quad(z, n):
    """e(z|n) from int_0^inf e^{-s} e^{z s^{1/n}} ds."""
    a = mpf(1) / n
    return quad(lambda s: exp(-s) * exp(z * s ** a), [0, 1, 10, 50, inf])


def levy_quad(x, alpha, nu=0):
    """-(1/pi) Im int_0^inf s^nu exp(-s x - e^{i pi alpha} s^alpha) ds.

    Integrated along the ray s = t e^{i phi}, with phi inside the sector where
    both exponents decay; Cauchy's theorem makes the ray integral equal to the
    real-axis one.
    """
    alpha = mpf(alpha)
    lo, hi = -pi / 2, pi / (2 * alpha) - pi
    phi = mpf("0.4") * lo + mpf("0.6") * min(hi, mpf(0))
    rot = exp(1j * phi)
    ph = exp(1j * pi * alpha)
    f = lambda t: rot * (t * rot) ** nu * exp(-t * rot * x - ph * (t * rot) ** alpha)
    return -quad(f, [0, 1, 10, 100, inf]).imag / pi

def levy_stieltjes(p, alpha, nu=0):
    """Laplace transform of the (modified) stable density with the x-integral
    done first: -(1/pi) Im int_0^inf (-s)^nu exp(-(-s)^alpha) / (s + p) ds,
    (-s)^b = e^{i pi b} s^b, along a rotated ray."""
    alpha = mpf(alpha)
    rot = exp(-2j * pi / 5)
    f = lambda t: (exp(1j * pi * nu) * rot * (t * rot) ** nu
                   * exp(-exp(1j * pi * alpha) * (t * rot) ** alpha) / (t * rot + p))
    return -quad(f, [0, 1, 10, 100, 1000, inf]).imag / pi


def levy_moment_via_laplace(mu, alpha):
    """<x^mu> for 0 < mu < 1 from the Laplace transform exp(-p^alpha):
    (1/Gamma(-mu)) int_0^inf p^{-mu-1} (exp(-p^alpha) - 1) dp."""
    # p = u^k with k = 1/(alpha - mu) removes the p^(alpha-mu-1) endpoint singularity
    k = 1 / (alpha - mu)
    f = lambda u: k * u ** (k - 1) * (u ** k) ** (-mu - 1) * (exp(-(u ** k) ** alpha) - 1)
    return quad(f, [0, 1, 2, 4, inf]) / gamma(-mu)



class _Printer(dict):
    def __setitem__(self, k, v):
        print(f"inline constexpr double {k} = {mp.nstr(v, 20)};", flush=True)
        super().__setitem__(k, v)


values = _Printer()

values["gamma_0_75"] = quad(lambda t: t ** (-0.25) * exp(-t), [0, 1, inf])
values["poch_1_5_m0_25"] = quad(lambda t: t ** 0.25 * exp(-t), [0, 1, inf]) / quad(
    lambda t: t ** 0.5 * exp(-t), [0, 1, inf])
coeffs = taylor(lambda t: exp(1 * t + (-1) * t * t), 0, 4)
values["hermite2_4_1_m1"] = coeffs[4] * 24
values["hermite_3_0_7"] = -diff(lambda x: exp(-x * x), mpf("0.7"), 3) * exp(mpf("0.7") ** 2)
values["quasi_m1_n2"] = quasi_quad(-1, 2)
values["dawson_1"] = dawson_quad(1)
values["erfi_1"] = 2 / sqrt(pi) * e * dawson_quad(1)
values["hyp2f1_half_1_3half_quarter"] = sum(
    (mpf(1) / 2) / (mpf(1) / 2 + r) * mpf("0.25") ** r for r in range(200))
values["hyp1f2_c1"] = quad(lambda t: cos(pi * t * t / 2), [0, 1])
values["hyp1f1_deriv_1"] = diff(lambda x: mp.hyp1f1(0.5, 1.5, x), mpf("0.3"), 1)
values["sg_1"] = sg_quad(1)
values["sg_d2_0_8"] = diff(sg_quad, mpf("0.8"), 2)
values["cg_d3_0_5"] = diff(lambda x: exp(-x * x), mpf("0.5"), 3)
values["sg_anti_1"] = quad(sg_quad, [0, 1])
values["gauss_prim_1"] = quad(lambda t: exp(-t * t), [0, 1])
values["sg_alpha_0_5"] = quad(
    lambda x: 2 / sqrt(pi) * x * exp(-x * x) * mp.hyp1f1(0.5, 1.5, 0.5 * x * x), [0, 1, 5, 20, inf])
values["quasi_1_n3"] = quasi_quad(-1, 3)
values["ie_2"] = quad(lambda x: quasi_quad(-x * x, 2), [-inf, -5, 0, 5, inf])
values["e_nu_0_25_m0_5_2"] = sum(
    mpf("0.25") ** r / mp.factorial(r) * gamma((r - mpf("0.5")) / 2 + 1) for r in range(120))
values["quadratic_2_1_3"] = quad(lambda x: quasi_quad(-(2 * x * x - x), 3), [-inf, -3, 0, 0.5, 3, inf])
values["density_3_1_2"] = quasi_quad(-mpf(9) / 2, 2) / (sqrt(2 * pi) * gamma(mpf(3) / 4))
values["moment2_n3"] = 2 * quad(
    lambda x: x * x * quasi_quad(-x * x / 2, 3), [0, 1, 5, 20, 100, inf]) / (sqrt(2 * pi) * gamma(mpf(5) / 6))
values["quasi_d1_1_2"] = diff(lambda x: quasi_quad(-x * x, 2), mpf(1), 1)
values["i_alpha_0_5"] = quad(lambda x: quad(lambda s: exp(-s - x * x * s ** 0.5), [0, 1, 10, inf]),
                             [-inf, -3, 0, 3, inf])
values["levy_1_0_5"] = levy_quad(1, mpf(1) / 2)
values["levy_10_0_7"] = levy_quad(10, mpf("0.7"))
values["levy_moment_0_3_0_7"] = levy_moment_via_laplace(mpf("0.3"), mpf("0.7"))
values["levy_laplace_2_0_7"] = levy_stieltjes(2, mpf("0.7"))
values["weibull_4_0_5"] = levy_stieltjes(4, mpf("0.5"), mpf("-0.5"))
values["fresnel_c_1"] = quad(lambda t: cos(pi * t * t / 2), [0, 1])
values["fresnel_s_1"] = quad(lambda t: sin(pi * t * t / 2), [0, 1])
values["fresnel_improper"] = quad(lambda u: sin(pi * u / 2) * u ** mpf(-1.5), [0, 2, 4, 8]) / 4 + \
    mp.quadosc(lambda u: sin(pi * u / 2) * u ** mpf(-1.5), [8, inf], period=4) / 4
values["quartic_1"] = quad(lambda x: exp(-x ** 4), [0, 1, 3, inf])
values["quartic_0_5"] = quad(lambda x: exp(-x ** 4 / 2), [0, 1, 3, inf])
