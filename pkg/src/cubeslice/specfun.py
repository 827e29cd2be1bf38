"""Special-function kernels: sinc, Bessel J0/J1, j1c = 2 J1(x)/x, Si, Ci, erf.

All functions accept scalars or numpy arrays and return the same shape.
NaN inputs propagate. Absolute accuracy is about 1e-15 on the ranges used
by the rest of the package (Bessel arguments up to 1e4).

Branch layout
-------------
* Bessel: power series for |x| <= 4, Miller backward recurrence for
  4 < |x| <= 25, Hankel asymptotic expansion for |x| > 25.
* Si/Ci: power series for x <= 4, continued fraction for the auxiliary
  functions f, g (via E1(ix)) beyond.
* erf: positive Taylor series times exp(-x^2) for |x| <= 3, continued
  fraction for erfc beyond.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "sinc",
    "bessel_j0",
    "bessel_j1",
    "j1c",
    "sine_integral",
    "cosine_integral",
    "erf",
    "hankel_coefficients",
    "BESSEL_SERIES_MAX",
    "BESSEL_ASYMPTOTIC_MIN",
    "SI_SERIES_MAX",
]

BESSEL_SERIES_MAX = 4.0
BESSEL_ASYMPTOTIC_MIN = 25.0
SI_SERIES_MAX = 4.0
_ERF_SERIES_MAX = 3.0

_EULER_GAMMA = 0.5772156649015329


def _as_array(x):
    arr = np.asarray(x, dtype=float)
    return arr, arr.ndim == 0


def _out(arr, scalar):
    return float(arr) if scalar else arr


def sinc(x):
    """Unnormalized sinc, sin(x)/x with sinc(0) = 1."""
    x, scalar = _as_array(x)
    out = np.ones_like(x)
    nz = x != 0
    out[nz] = np.sin(x[nz]) / x[nz]
    out[np.isnan(x)] = np.nan
    return _out(out, scalar)


# -- Bessel functions -------------------------------------------------------

def _series_j(nu, x, terms=30):
    # J_nu(x) = (x/2)^nu sum_k (-x^2/4)^k / (k! (k+nu)!)
    q = -0.25 * x * x
    term = np.ones_like(x) / math.factorial(nu)
    total = term.copy()
    for k in range(1, terms):
        term = term * q / (k * (k + nu))
        total += term
    return total * (0.5 * x) ** nu


def _miller_j01(x):
    """J0 and J1 by backward recurrence normalized with J0 + 2 sum J_2k = 1."""
    top = int(2 * ((float(x.max()) + 32.0) // 2) + 2)
    jp1 = np.zeros_like(x)
    j = np.full_like(x, 1e-300)
    norm = np.zeros_like(x)
    j0 = j1 = None
    for k in range(top, 0, -1):
        jm1 = (2.0 * k / x) * j - jp1
        jp1, j = j, jm1
        # j now holds J_{k-1} (unnormalized)
        if (k - 1) % 2 == 0 and k - 1 > 0:
            norm += 2.0 * j
        if k - 1 == 1:
            j1 = j.copy()
        big = np.abs(j) > 1e250
        if big.any():
            scale = np.where(big, 1e-250, 1.0)
            j *= scale
            jp1 *= scale
            norm *= scale
            if j1 is not None:
                j1 *= scale
    j0 = j
    norm += j0
    return j0 / norm, j1 / norm


def hankel_coefficients(nu, count):
    """Coefficients a_k(nu), k = 0..count-1, of the Hankel expansion.

    H^(1)_nu(x) ~ sqrt(2/(pi x)) exp(i(x - nu pi/2 - pi/4)) sum_k i^k a_k / x^k.
    """
    mu = 4.0 * nu * nu
    out = np.empty(count)
    out[0] = 1.0
    for k in range(1, count):
        out[k] = out[k - 1] * (mu - (2 * k - 1) ** 2) / (k * 8.0)
    return out


def _asymptotic_j(nu, x, terms=30):
    a = hankel_coefficients(nu, terms)
    inv = 1.0 / x
    p = np.zeros_like(x)
    q = np.zeros_like(x)
    power = np.ones_like(x)
    for k in range(terms):
        # i^k: real for even k (sign (-1)^(k/2)), imaginary for odd k
        if k % 2 == 0:
            p += (-1) ** (k // 2) * a[k] * power
        else:
            q += (-1) ** (k // 2) * a[k] * power
        power = power * inv
    # cos/sin of x - nu pi/2 - pi/4 without forming the shifted argument
    c, s = np.cos(x), np.sin(x)
    r = math.sqrt(0.5)
    if nu == 0:
        cos_chi, sin_chi = r * (c + s), r * (s - c)
    else:
        cos_chi, sin_chi = r * (s - c), -r * (c + s)
    return np.sqrt(2.0 / (math.pi * x)) * (p * cos_chi - q * sin_chi)


def _bessel(nu, x):
    ax = np.abs(x)
    out = np.empty_like(ax)
    small = ax <= BESSEL_SERIES_MAX
    large = ax > BESSEL_ASYMPTOTIC_MIN
    mid = ~(small | large | np.isnan(ax))
    if small.any():
        out[small] = _series_j(nu, ax[small])
    if mid.any():
        j0, j1 = _miller_j01(ax[mid])
        out[mid] = j0 if nu == 0 else j1
    if large.any():
        out[large] = _asymptotic_j(nu, ax[large])
    out[np.isnan(ax)] = np.nan
    if nu == 1:
        out = np.where(x < 0, -out, out)
    return out


def bessel_j0(x):
    """Bessel function of the first kind of order 0."""
    x, scalar = _as_array(x)
    return _out(_bessel(0, x), scalar)


def bessel_j1(x):
    """Bessel function of the first kind of order 1 (odd in x)."""
    x, scalar = _as_array(x)
    return _out(_bessel(1, x), scalar)


def j1c(x):
    """2 J1(x)/x with j1c(0) = 1; the Fourier transform of the unit-area disc."""
    x, scalar = _as_array(x)
    ax = np.abs(x)
    out = np.empty_like(ax)
    small = ax <= BESSEL_SERIES_MAX
    if small.any():
        # 2 J1(x)/x = sum_k (-x^2/4)^k / (k! (k+1)!)
        q = -0.25 * ax[small] ** 2
        term = np.ones_like(q)
        total = term.copy()
        for k in range(1, 30):
            term = term * q / (k * (k + 1))
            total += term
        out[small] = total
    rest = ~small
    if rest.any():
        out[rest] = 2.0 * _bessel(1, ax[rest]) / ax[rest]
    return _out(out, scalar)


# -- sine and cosine integrals ---------------------------------------------

def _si_ci_series(x, terms=40):
    x2 = x * x
    si_term = x.copy()
    si = x.copy()
    ci_term = np.ones_like(x)
    ci_sum = np.zeros_like(x)
    for k in range(1, terms):
        si_term = -si_term * x2 / ((2 * k) * (2 * k + 1))
        si += si_term / (2 * k + 1)
        ci_term = -ci_term * x2 / ((2 * k - 1) * (2 * k))
        ci_sum += ci_term / (2 * k)
    with np.errstate(divide="ignore"):
        ci = _EULER_GAMMA + np.log(x) + ci_sum
    return si, ci


def _e1_imag_cf(x, max_iter=400, eps=1e-17):
    """E1(ix) by modified Lentz on the even continued fraction, x > 0."""
    z = 1j * x
    b = z + 1.0
    c = np.full(x.shape, 1e300, dtype=complex)
    d = 1.0 / b
    h = d.copy()
    for i in range(1, max_iter):
        a = -float(i * i)
        b = b + 2.0
        d = 1.0 / (a * d + b)
        c = b + a / c
        delta = c * d
        h = h * delta
        if np.all(np.abs(delta - 1.0) < eps):
            break
    return h * np.exp(-z)


def _si_ci(x):
    x, scalar = _as_array(x)
    ax = np.abs(x)
    si = np.empty_like(ax)
    ci = np.empty_like(ax)
    small = ax <= SI_SERIES_MAX
    large = ~small & ~np.isnan(ax)
    if small.any():
        si[small], ci[small] = _si_ci_series(ax[small])
    if large.any():
        e1 = _e1_imag_cf(ax[large])
        # E1(ix) = -Ci(x) + i (Si(x) - pi/2)
        ci[large] = -e1.real
        si[large] = e1.imag + 0.5 * math.pi
    si[np.isnan(ax)] = np.nan
    ci[np.isnan(ax)] = np.nan
    si = np.where(x < 0, -si, si)
    return si, ci, scalar


def sine_integral(x):
    """Si(x) = int_0^x sin(t)/t dt (odd)."""
    si, _, scalar = _si_ci(x)
    return _out(si, scalar)


def cosine_integral(x):
    """Ci(x) = gamma + ln x + int_0^x (cos t - 1)/t dt for x > 0."""
    _, ci, scalar = _si_ci(x)
    return _out(ci, scalar)


# -- error function -----------------------------------------------------------

def _erf_series(x, terms=80):
    # erf(x) = 2/sqrt(pi) exp(-x^2) sum_k 2^k x^(2k+1) / (2k+1)!!
    x2 = 2.0 * x * x
    term = x.copy()
    total = x.copy()
    for k in range(1, terms):
        term = term * x2 / (2 * k + 1)
        total += term
    return 2.0 / math.sqrt(math.pi) * np.exp(-x * x) * total


def _erfc_cf(x, iters=120):
    # erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
    f = np.zeros_like(x)
    for k in range(iters, 0, -1):
        f = (0.5 * k) / (x + f)
    return np.exp(-x * x) / math.sqrt(math.pi) / (x + f)


def erf(x):
    """Error function (2/sqrt(pi)) int_0^x exp(-t^2) dt."""
    x, scalar = _as_array(x)
    ax = np.abs(x)
    out = np.empty_like(ax)
    small = ax <= _ERF_SERIES_MAX
    large = ~small & ~np.isnan(ax)
    if small.any():
        out[small] = _erf_series(ax[small])
    if large.any():
        out[large] = 1.0 - _erfc_cf(ax[large])
    out[np.isnan(ax)] = np.nan
    out = np.where(x < 0, -out, out)
    return _out(out, scalar)
