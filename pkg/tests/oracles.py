"""Independent high-precision reference values (mpmath).

Nothing here shares code with the package: wave functions come from the
closed-form Hermite/Laguerre polynomials, antiderivatives from mpmath
quadrature, Airy data from mpmath's own Airy implementation.
"""

import mpmath as mp

DPS = 30


def phi(kind, n, x, q=None):
    with mp.workdps(DPS):
        x = mp.mpf(x)
        if kind == "hermite":
            return float(mp.exp(-x * x / 2) * mp.hermite(n, x)
                         / (mp.power(mp.pi, 0.25) * mp.sqrt(mp.power(2, n) * mp.factorial(n))))
        p = n + mp.mpf(q)
        val = (mp.sqrt(mp.factorial(n) / mp.gamma(p + 1)) * mp.power(x, (p - n) / 2)
               * mp.exp(-x / 2) * (-1) ** n * mp.laguerre(n, p - n, x))
        return float(val)


def _gamma_nu(nu):
    return mp.sqrt(2 * mp.gamma((nu + 1) / 2) / mp.gamma(nu / 2 + 1))


def _phi_mp(kind, n, x, q):
    if kind == "hermite":
        return (mp.exp(-x * x / 2) * mp.hermite(n, x)
                / (mp.power(mp.pi, 0.25) * mp.sqrt(mp.power(2, n) * mp.factorial(n))))
    p = n + q
    return (mp.sqrt(mp.factorial(n) / mp.gamma(p + 1)) * mp.power(x, (p - n) / 2)
            * mp.exp(-x / 2) * (-1) ** n * mp.laguerre(n, p - n, x))


def psi_mp(kind, n, x, q=None):
    if n < 0:
        return mp.mpf(0)
    q = None if q is None else mp.mpf(q)
    if kind == "hermite":
        return _phi_mp(kind, n, x, q) / _gamma_nu(n)
    return _phi_mp(kind, n, x, q) / (_gamma_nu(n) * _gamma_nu(n + q) * mp.sqrt(x / 2))


def Psi_sharp(kind, n, x, q=None):
    """-int_x^inf 2 psi_n by quadrature."""
    with mp.workdps(DPS):
        x = mp.mpf(x)
        f = lambda t: 2 * psi_mp(kind, n, t, q)
        return float(-mp.quad(f, [x, x + 10, x + 40, mp.inf]))


def rho_beta1(n, p, x):
    """rho_{1,n,p}(x) = sum_{j<n} phi_j^2 + psi_{n-1} (1 + Psi_sharp_n), q = p - n."""
    with mp.workdps(DPS):
        x = mp.mpf(x)
        q = mp.mpf(p) - n
        rho2 = mp.fsum(_phi_mp("laguerre", j, x, q) ** 2 for j in range(n))
        psi = psi_mp("laguerre", n - 1, x, q)
        return float(rho2 + psi * (1 + mp.mpf(Psi_sharp("laguerre", n, x, q))))


def airy(x):
    with mp.workdps(DPS):
        return float(mp.airyai(x)), float(mp.airyai(x, derivative=1))


def airy_int0(x):
    """AI_0(x) = -1/3 + int_0^x Ai via mpmath quadrature."""
    with mp.workdps(DPS):
        return float(-mp.mpf(1) / 3 + mp.quad(mp.airyai, [0, x]))


def airy_first_zeros():
    with mp.workdps(DPS):
        return float(mp.airyaizero(1)), float(mp.airyaizero(1, derivative=1))


def airy_int0_hyp(x):
    """AI_0(x) = -1/3 + int_0^x Ai from the 1F2 series of the integral (fast)."""
    with mp.workdps(DPS):
        x = mp.mpf(x)
        third = mp.mpf(1) / 3
        z = x ** 3 / 9
        a0, a1 = mp.airyai(0), mp.airyai(0, derivative=1)
        val = (a0 * x * mp.hyp1f2(third, 2 * third, 4 * third, z)
               + a1 * x ** 2 / 2 * mp.hyp1f2(2 * third, 4 * third, 5 * third, z))
        return float(-third + val)
