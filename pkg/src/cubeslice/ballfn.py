"""Ball's integral function and the estimates built around it.

    f(p)  = sqrt(p/2) (2/pi) int_0^inf |sin t / t|^p dt
    f~(p) = (p/2) (1/2) int_0^inf |j1c(s)|^p s ds

f(2) = f~(2) = 1, f(p) -> sqrt(3/pi) as p -> inf.  This module evaluates
both functions, reproduces the piecewise upper-bound pipelines at p = 9/4
and p = sqrt(2) + 1/2, the convexity witness, the crossing points x_p,
the distribution-function comparison between |sinc| and exp(-x^2/6), and
locates the special points p1, p2, p0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import optimize
from scipy.special import zeta

from .oscint import (DEFAULT_SPEC, QuadratureSpec,
                     _tanh_sinh_nodes, integrate_abs_power)
from .specfun import bessel_j0, bessel_j1, erf, j1c, sinc, sine_integral

__all__ = [
    "SQRT_3_OVER_PI",
    "P_LOW",
    "P_HIGH",
    "BallSample",
    "AppendixBound",
    "NpComparison",
    "SpecialPoints",
    "ball_f",
    "ball_f_complex",
    "ball_sample",
    "ball_f_second_derivative",
    "appendix_bound_9_4",
    "appendix_bound_sqrt2_half",
    "convexity_witness",
    "crossing_point",
    "np_compare",
    "np_compare_grid",
    "np_crossing",
    "find_special_points",
    "kos_asymptotic",
    "j1_zeros",
]

SQRT_3_OVER_PI = math.sqrt(3.0 / math.pi)
P_LOW = math.sqrt(2.0) + 0.5
P_HIGH = 9.0 / 4.0


@dataclass(frozen=True)
class BallSample:
    """A value of f(p) and how it was obtained."""

    p: float
    f: float
    method: str  # "quadrature", "appendix_bound" or "asymptotic"


def ball_f(p: float, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """f(p) = sqrt(p/2) (2/pi) int_0^inf |sinc|^p, for p > 1.

    Accurate to about 1e-13 for p up to 1e6.

    Examples
    --------
    >>> round(ball_f(2.0), 12)
    1.0
    """
    p = float(p)
    if not p > 1.0:
        raise ValueError("f(p) diverges for p <= 1")
    return math.sqrt(0.5 * p) * integrate_abs_power([1.0], p, spec).value


def kos_asymptotic(p: float) -> float:
    """Two-term large-p expansion sqrt(3/pi) (1 - 3/(20p) - 13/(1120p^2))."""
    p = float(p)
    if not p > 0:
        raise ValueError("p must be positive")
    return SQRT_3_OVER_PI * (1.0 - 3.0 / (20.0 * p) - 13.0 / (1120.0 * p * p))


def ball_sample(p: float, method: str = "quadrature") -> BallSample:
    """Wrap f(p) from one of the available methods."""
    if method == "quadrature":
        return BallSample(p, ball_f(p), method)
    if method == "asymptotic":
        return BallSample(p, kos_asymptotic(p), method)
    if method == "appendix_bound":
        for target, fn in ((P_HIGH, appendix_bound_9_4), (P_LOW, appendix_bound_sqrt2_half)):
            if abs(p - target) < 1e-12:
                return BallSample(p, fn().total, method)
        raise ValueError("appendix bounds exist only for p = 9/4 and p = sqrt(2) + 1/2")
    raise ValueError(f"unknown method {method!r}")


def ball_f_second_derivative(p: float, step: float = 1e-3) -> float:
    """Central second difference of f with the given step."""
    return (ball_f(p + step) - 2.0 * ball_f(p) + ball_f(p - step)) / (step * step)


# -- complex analogue -----------------------------------------------------------

def j1_zeros(count: int) -> np.ndarray:
    """First ``count`` positive zeros of J1 (McMahon start, Newton polish)."""
    k = np.arange(1, count + 1, dtype=float)
    beta = (k + 0.25) * math.pi
    x = beta - 3.0 / (8.0 * beta) + 3.0 / (128.0 * beta ** 3)
    for _ in range(6):
        j1 = bessel_j1(x)
        x = x - j1 / (bessel_j0(x) - j1 / x)
    return x


_COMPLEX_ARCHES = 2000


def ball_f_complex(p: float, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """f~(p) = (p/2)(1/2) int_0^inf |j1c(s)|^p s ds for p > 4/3.

    The range is split at the zeros of J1.  Beyond the last zero the mean
    value of |cos|^p is combined with the large-s modulus of J1; cutting at
    a zero removes the first oscillatory correction.
    """
    p = float(p)
    if not p > 4.0 / 3.0:
        raise ValueError("f~(p) diverges for p <= 4/3")
    zeros = j1_zeros(_COMPLEX_ARCHES)
    left = np.concatenate([[0.0], zeros[:-1]])
    nodes, w = _tanh_sinh_nodes(left, zeros, 1.0 / 8)
    vals = np.abs(j1c(nodes)) ** p * nodes
    head = math.fsum((w * vals).ravel())
    X = float(zeros[-1])
    mean = math.exp(math.lgamma(0.5 * (p + 1)) - math.lgamma(0.5 * p + 1)) / math.sqrt(math.pi)
    e = 1.5 * p
    tail = mean * (8.0 / math.pi) ** (0.5 * p) * (
        X ** (2.0 - e) / (e - 2.0) + (3.0 * p / 16.0) * X ** (-e) / e)
    return 0.25 * p * (head + tail)


# -- explicit bound pipelines -------------------------------------------------------------

@dataclass(frozen=True)
class AppendixBound:
    """Piecewise upper bound for f(p) at one exponent.

    ``pieces`` maps piece names to their upper bounds; ``total`` is their
    sum.  ``notes`` records alternative readings evaluated for comparison.
    """

    p: float
    total: float
    pieces: dict = field(default_factory=dict)
    notes: dict = field(default_factory=dict)

    def __float__(self):
        return float(self.total)


def appendix_bound_9_4() -> AppendixBound:
    """Upper bound for f(9/4) from sinc^2 majorants on each arch.

    Pieces: I0 on (0, pi) with the (1 - x^2/24) factor, I1 on (pi, 2pi) with
    the factor 0.683 >= max |sinc|^(1/4) there, I_k for k = 2..5 with the
    factor (k pi)^(-1/4), and the tail J6 over (6 pi, inf).  Each sinc^2
    integral over an arch (k pi, (k+1) pi) equals Si(2(k+1)pi) - Si(2k pi).
    """
    p0 = P_HIGH
    c = math.sqrt(p0 / 2.0) * 2.0 / math.pi
    pi = math.pi
    pieces = {
        "I0": c * (sine_integral(2 * pi) - pi / 48.0),
        "I1": 0.683 * c * (sine_integral(4 * pi) - sine_integral(2 * pi)),
    }
    for k in range(2, 6):
        pieces[f"I{k}"] = c * (k * pi) ** -0.25 * (
            sine_integral(2 * (k + 1) * pi) - sine_integral(2 * k * pi))
    pieces["J6"] = c * (6 * pi) ** -0.25 * (0.5 * pi - sine_integral(12 * pi))
    total = math.fsum(pieces.values())
    # reading the arch integral as Si((2k+1)pi) - Si(2k pi) instead
    alt = math.fsum([pieces["I0"], pieces["I1"], pieces["J6"]] + [
        c * (k * pi) ** -0.25 * (sine_integral((2 * k + 1) * pi) - sine_integral(2 * k * pi))
        for k in range(2, 6)])
    return AppendixBound(p0, total, pieces, {"half_arch_reading_total": alt})


def appendix_bound_sqrt2_half() -> AppendixBound:
    """Upper bound for f(sqrt(2) + 1/2).

    I01 on (0, pi/2) uses the closed form of the Gaussian-times-quartic
    majorant; (pi/2, pi) and the arches in (pi, 6 pi) are integrated
    directly; the tail over (6 pi, inf) uses the zeta estimate with the
    constant 1.6 >= int_0^pi sin^p.
    """
    p0 = P_LOW
    c = math.sqrt(p0 / 2.0) * 2.0 / math.pi
    pi = math.pi
    i01 = c * (pi / (480.0 * p0) * (36.0 + pi * pi * p0) * math.exp(-pi * pi * p0 / 24.0)
               + math.sqrt(6.0 * pi) / p0 ** 1.5 * (p0 / 2.0 - 3.0 / 40.0)
               * erf(pi * math.sqrt(p0 / 24.0)))
    nodes, w = _tanh_sinh_nodes(np.array([0.5 * pi] + [k * pi for k in range(1, 6)]),
                                np.array([pi] + [(k + 1) * pi for k in range(1, 6)]), 1.0 / 32)
    vals = np.abs(sinc(nodes)) ** p0
    parts = c * (w * vals).sum(axis=1)
    pieces = {"I01": i01, "I02": float(parts[0])}
    for k in range(1, 6):
        pieces[f"I{k}"] = float(parts[k])
    pieces["tail"] = c * pi ** -p0 * (float(zeta(p0)) - sum(k ** -p0 for k in range(1, 6))) * 1.6
    total = math.fsum(pieces.values())
    head = pieces["I01"] + pieces["I02"] + sum(pieces[f"I{k}"] for k in range(1, 6))
    return AppendixBound(p0, total, pieces, {"head": head,
                                             "sin_power_integral": math.sqrt(pi) * math.exp(
                                                 math.lgamma(0.5 * (p0 + 1)) - math.lgamma(0.5 * p0 + 1))})


# -- convexity witness --------------------------------------------------------------

_WITNESS_ARCHES = 16


def _h(p, y):
    ly = np.log(y)
    return 4.0 * p * p * ly * ly + 4.0 * p * ly - 1.0


def _zeta_tail(p):
    """int_{K pi}^inf |sinc|^p with K = _WITNESS_ARCHES, by the Hurwitz series."""
    from .oscint import _binom_neg, _sin_power_moments
    terms = 40
    mom = _sin_power_moments(p, terms)
    j = np.arange(terms)
    return math.fsum(_binom_neg(p, terms) * mom * math.pi ** (-p - j) * zeta(p + j, _WITNESS_ARCHES))


def convexity_witness(p: float, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """int_0^inf h(p, x) |sinc x|^p dx with h = 4p^2 ln^2|sinc| + 4p ln|sinc| - 1.

    Equals 4 p^2 T'' + 4 p T' - T for T(p) = int |sinc|^p, hence has the sign
    of f''(p).  The first arches are integrated directly; beyond them T is
    the zeta series and its p-derivatives are taken by a five-point stencil.
    """
    p = float(p)
    if not p > 1.0:
        raise ValueError("p must exceed 1")
    K = _WITNESS_ARCHES
    k = np.arange(K)
    q = 0.25 * math.pi
    left = np.concatenate([[0.0, q, 2 * q, 3 * q], k[1:] * math.pi])
    right = np.concatenate([[q, 2 * q, 3 * q, math.pi], (k[1:] + 1) * math.pi])
    nodes, w = _tanh_sinh_nodes(left, right, 1.0 / 32)
    y = np.abs(sinc(nodes))
    with np.errstate(divide="ignore", invalid="ignore"):
        vals = np.where(y > 0, _h(p, np.maximum(y, 1e-300)) * y ** p, 0.0)
    head = math.fsum((w * vals).ravel())
    hstep = 2e-3
    t = [_zeta_tail(p + i * hstep) for i in (-2, -1, 0, 1, 2)]
    d1 = (t[0] - 8 * t[1] + 8 * t[3] - t[4]) / (12 * hstep)
    d2 = (-t[0] + 16 * t[1] - 30 * t[2] + 16 * t[3] - t[4]) / (12 * hstep * hstep)
    tail = 4 * p * p * d2 + 4 * p * d1 - t[2]
    return head + tail


def crossing_point(p: float) -> tuple:
    """(x_p, y_p) with y_p = exp(-(1+sqrt 2)/(2p)) = sinc(x_p), x_p in (0, pi)."""
    p = float(p)
    if not p > 0:
        raise ValueError("p must be positive")
    y = math.exp(-(1.0 + math.sqrt(2.0)) / (2.0 * p))
    x = optimize.bisect(lambda t: sinc(t) - y, 1e-12, math.pi, xtol=1e-15)
    return x, y


# -- distribution functions ------------------------------------------------------------

@dataclass(frozen=True)
class NpComparison:
    """Distribution functions at level y of g = |sinc| and h = exp(-x^2/6) on (0, inf)."""

    y: float
    G: float
    H: float

    @property
    def difference(self) -> float:
        return self.H - self.G


def _arch_maxima(count):
    """Locations x_m in (m pi, m pi + pi/2) of the local maxima of |sinc|, m >= 1."""
    m = np.arange(1, count + 1, dtype=float)
    b = (m + 0.5) * math.pi
    x = b - 1.0 / b
    for _ in range(8):
        # tan x = x  <=>  x cos x - sin x = 0
        g = x * np.cos(x) - np.sin(x)
        x = x - g / (-x * np.sin(x))
    return x


def np_compare_grid(ys) -> list:
    """:func:`np_compare` for an array of levels, vectorized over levels and arches."""
    ys = np.asarray(ys, dtype=float)
    if np.any((ys <= 0) | (ys >= 1)):
        raise ValueError("levels must lie in (0, 1)")
    H = np.sqrt(6.0 * np.log(1.0 / ys))
    # first arch: sinc decreasing on (0, pi)
    lo = np.zeros_like(ys)
    hi = np.full_like(ys, math.pi)
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        above = sinc(mid) > ys
        lo = np.where(above, mid, lo)
        hi = np.where(above, hi, mid)
    G = 0.5 * (lo + hi)
    # later arches m contribute when their maximum 1/sqrt(1+x_m^2) exceeds y
    count = int(math.ceil(1.0 / (math.pi * float(ys.min())))) + 2
    xm = _arch_maxima(count)
    ym = 1.0 / np.sqrt(1.0 + xm * xm)
    iy, im = np.nonzero(ym[None, :] > ys[:, None])
    if iy.size:
        level = ys[iy]
        peak = xm[im]
        m = im + 1.0
        g = lambda x: np.abs(sinc(x))
        # left root in (m pi, peak), right root in (peak, (m+1) pi)
        l0, l1 = m * math.pi, peak.copy()
        r0, r1 = peak.copy(), (m + 1) * math.pi
        for _ in range(60):
            lm = 0.5 * (l0 + l1)
            up = g(lm) > level
            l1 = np.where(up, lm, l1)
            l0 = np.where(up, l0, lm)
            rm = 0.5 * (r0 + r1)
            up = g(rm) > level
            r0 = np.where(up, rm, r0)
            r1 = np.where(up, r1, rm)
        widths = 0.5 * (r0 + r1) - 0.5 * (l0 + l1)
        G = G + np.bincount(iy, weights=widths, minlength=ys.size)
    return [NpComparison(float(y), float(g), float(h)) for y, g, h in zip(ys, G, H)]


def np_compare(y: float) -> NpComparison:
    """Measures of {x > 0 : |sinc x| > y} (G) and {x > 0 : exp(-x^2/6) > y} (H)."""
    return np_compare_grid([y])[0]


def np_crossing(lo: float = 0.05, hi: float = 0.5) -> float:
    """Level y0 where H - G changes sign (H < G below, H > G above)."""
    f = lambda y: np_compare(y).difference
    return optimize.brentq(f, lo, hi, xtol=1e-14)


# -- special points ---------------------------------------------------------------------

@dataclass(frozen=True)
class SpecialPoints:
    """p1: f(p1) = sqrt(3/pi); p2: minimizer of f; p0: inflection point of f."""

    p1: float
    p2: float
    p0: float
    p0_witness: float


def find_special_points(spec: QuadratureSpec = DEFAULT_SPEC) -> SpecialPoints:
    """Locate p1 on (2, 2.5), p2 on (2.5, 4.5) and p0 on (4, 5).

    p0 is the root of the central second difference of f (step 1e-3);
    ``p0_witness`` is the root of the convexity witness, which has the sign
    of f'' and serves as a cross-check.
    """
    f = lambda p: ball_f(p, spec)
    p1 = optimize.brentq(lambda p: f(p) - SQRT_3_OVER_PI, 2.0, 2.5, xtol=1e-12)
    p2 = optimize.golden(f, brack=(2.5, 3.4, 4.5), tol=1e-9)
    p0 = optimize.brentq(lambda p: ball_f_second_derivative(p), 4.0, 5.0, xtol=1e-9)
    p0w = optimize.brentq(convexity_witness, 4.0, 5.0, xtol=1e-12)
    return SpecialPoints(p1, float(p2), p0, p0w)
