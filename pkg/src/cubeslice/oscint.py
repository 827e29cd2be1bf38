"""Semi-infinite oscillatory quadrature for sinc and Bessel products.

The integrals handled here all have the form

    int_0^inf F(s) ds,   F(s) = prod_k phi(a_k s) * psi(c s) * s^e

with phi in {sinc, j1c} and psi in {cos, J0}.  The range is split at a
cut point X.  On [0, X] the integrand is evaluated directly with
Gauss-Legendre chunks whose length is half the period of the fastest
oscillation.  On [X, inf) the integrand is replaced by its expansion

    F(s) = sum_{omega, q} C_{omega, q} s^(-beta0 - q) exp(i omega s)

which is exact for sinc products (q = 0 only) and the Hankel asymptotic
expansion for Bessel products.  Every term is integrated in closed form
along the rotated contour s = X + i u / omega, so no extrapolation of
partial sums is involved.

A general-purpose driver, :func:`integrate_semi_infinite`, is kept for
integrands without such structure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .specfun import bessel_j0, hankel_coefficients, j1c, sinc

__all__ = [
    "QuadratureSpec",
    "QuadratureResult",
    "DivergentIntegralError",
    "integrate_semi_infinite",
    "integrate_sinc_product_cos",
    "integrate_j1c_product_J0",
    "integrate_abs_power",
    "power_exp_tail",
    "tanh_sinh_rule",
]


class DivergentIntegralError(ValueError):
    """The requested integral does not converge."""


@dataclass(frozen=True)
class QuadratureSpec:
    """Controls for the semi-infinite integrators.

    Parameters
    ----------
    abs_tol, rel_tol : float
        A result is flagged converged when its error estimate is below
        ``max(abs_tol, rel_tol * |value|)``.
    max_periods : int
        Upper bound on the number of chunks integrated directly.
    points_per_period : int
        Gauss-Legendre order used on each chunk.
    acceleration : {"none", "euler_alternating"}
        Summation of chunk integrals in :func:`integrate_semi_infinite`.
    """

    abs_tol: float = 1e-10
    rel_tol: float = 1e-10
    max_periods: int = 10**6
    points_per_period: int = 64
    acceleration: str = "none"

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise ValueError("tolerances must be positive")
        if self.max_periods < 1:
            raise ValueError("max_periods must be at least 1")
        if self.points_per_period < 4:
            raise ValueError("points_per_period must be at least 4")
        if self.acceleration not in ("none", "euler_alternating"):
            raise ValueError(f"unknown acceleration {self.acceleration!r}")

    def tolerance(self, value: float) -> float:
        return max(self.abs_tol, self.rel_tol * abs(value))


@dataclass(frozen=True)
class QuadratureResult:
    """Outcome of a semi-infinite integration.

    ``tail_bound`` bounds the error committed on the part of the range
    that was not integrated chunk by chunk.  ``est_error`` includes it.
    """

    value: float
    est_error: float
    periods_used: int
    tail_bound: float
    converged: bool

    def __float__(self):
        return float(self.value)


DEFAULT_SPEC = QuadratureSpec()


# -- rules -----------------------------------------------------------------

_GL_CACHE: dict = {}


def _gauss_legendre(n):
    if n not in _GL_CACHE:
        _GL_CACHE[n] = np.polynomial.legendre.leggauss(n)
    return _GL_CACHE[n]


_TS_CACHE: dict = {}


def tanh_sinh_rule(h=1.0 / 16, t_max=3.2):
    """Nodes on (-1, 1) of the tanh-sinh rule with step h.

    Returns ``(x, dist, w)`` where ``dist = 1 - |x|`` is computed without
    cancellation so that callers can place nodes accurately near endpoints.
    """
    key = (h, t_max)
    if key not in _TS_CACHE:
        t = np.arange(-t_max, t_max + 0.5 * h, h)
        u = 0.5 * math.pi * np.sinh(t)
        x = np.tanh(u)
        dist = 1.0 / (np.exp(2.0 * np.abs(u)) + 1.0) * 2.0
        w = h * 0.5 * math.pi * np.cosh(t) / np.cosh(u) ** 2
        keep = (dist > 0) & (w > 1e-300)
        _TS_CACHE[key] = (x[keep], dist[keep], w[keep])
    return _TS_CACHE[key]


def _tanh_sinh_nodes(left, right, h=1.0 / 16):
    """Nodes and weights for many intervals at once (arrays of endpoints)."""
    x, dist, w = tanh_sinh_rule(h)
    left = np.asarray(left, dtype=float)[:, None]
    right = np.asarray(right, dtype=float)[:, None]
    half = 0.5 * (right - left)
    # measure from the nearer endpoint to keep relative accuracy there
    nodes = np.where(x < 0, left + half * dist, right - half * dist)
    return nodes, half * w


# -- tails -----------------------------------------------------------------

_TAIL_U_MAX = 48.0
_TAIL_PANEL = 5.0
_TAIL_ORDER = 20


def _tail_mesh(z):
    """Panel breakpoints in u for the rotated contour at z = omega X."""
    pts = [0.0]
    b = min(z, _TAIL_PANEL)
    pts.append(b)
    while b < _TAIL_U_MAX:
        b = b + min(_TAIL_PANEL, b)
        pts.append(b)
    return np.array(pts)


def _contour_sums(z, beta0, coef_sets, X):
    """Evaluate sum_q C_q int_X^inf s^(-beta0-q) e^(i omega s) ds, omega = z/X > 0.

    ``z`` may be an array of values; ``coef_sets`` is a list of coefficient
    arrays of shape (len(z), order+1) (or 1-d for scalar z).  All sets share
    the same contour nodes.  Returns one result per set.
    """
    scalar = np.ndim(z) == 0
    z = np.atleast_1d(np.asarray(z, dtype=float))
    sets = [np.atleast_2d(np.asarray(c, dtype=complex)) for c in coef_sets]
    xg, wg = _gauss_legendre(_TAIL_ORDER)
    meshes = [_tail_mesh(v) for v in z]
    lo = np.concatenate([m[:-1] for m in meshes])[:, None]
    hi = np.concatenate([m[1:] for m in meshes])[:, None]
    owner = np.repeat(np.arange(z.size), [m.size - 1 for m in meshes])
    zz = np.repeat(z[owner], _TAIL_ORDER)
    u = (0.5 * (hi - lo) * xg + 0.5 * (hi + lo)).ravel()
    w = (0.5 * (hi - lo) * wg).ravel()
    log1 = np.log(1.0 + 1j * u / zz)
    base = w * np.exp(-u - beta0 * log1)
    r = np.exp(-log1) / X
    starts = np.concatenate([[0], np.cumsum([(m.size - 1) * _TAIL_ORDER for m in meshes])[:-1]])
    idx = np.repeat(np.arange(z.size), [(m.size - 1) * _TAIL_ORDER for m in meshes])
    omega = z / X
    pref = (1j / omega) * np.exp(1j * z) * X ** (-beta0)
    out = []
    for coefs in sets:
        cnode = coefs[idx]
        poly = np.zeros_like(r)
        for q in range(cnode.shape[1] - 1, -1, -1):
            poly = poly * r + cnode[:, q]
        val = pref * np.add.reduceat(base * poly, starts)
        out.append(val[0] if scalar else val)
    return out


def power_exp_tail(beta, omega, X):
    """int_X^inf s^(-beta) exp(i omega s) ds for real beta, omega and X > 0.

    Raises :class:`DivergentIntegralError` for omega = 0 with beta <= 1 or
    for beta <= 0.
    """
    if X <= 0:
        raise ValueError("X must be positive")
    if omega == 0.0:
        if beta <= 1.0:
            raise DivergentIntegralError("non-oscillatory tail with beta <= 1")
        return complex(X ** (1.0 - beta) / (beta - 1.0))
    if beta <= 0.0:
        raise DivergentIntegralError("beta must be positive")
    val = _contour_sums(abs(omega) * X, beta, [np.array([1.0 + 0j])], X)[0]
    return val if omega > 0 else val.conjugate()


# -- expansions of the integrand tail -----------------------------------------

class _Expansion:
    """Sum over (omega, q) of C s^(-beta0 - q) exp(i omega s)."""

    def __init__(self, order):
        self.order = order
        self.omega = np.zeros(1)
        self.coef = np.zeros((1, order + 1), dtype=complex)
        self.coef[0, 0] = 1.0
        self.beta0 = 0.0

    def multiply(self, freq, beta, plus, minus):
        """Multiply by a factor s^-beta [e^{i f s} P(1/s) + e^{-i f s} M(1/s)]."""
        k = self.order + 1
        out_w, out_c = [], []
        for sign, series in ((1.0, plus), (-1.0, minus)):
            series = np.asarray(series, dtype=complex)
            toe = np.zeros((k, k), dtype=complex)
            for q in range(min(k, len(series))):
                toe[np.arange(k - q), np.arange(q, k)] = series[q]
            out_w.append(self.omega + sign * freq)
            out_c.append(self.coef @ toe)
        omega = np.concatenate(out_w) + 0.0
        coef = np.concatenate(out_c)
        uniq, inv = np.unique(omega, return_inverse=True)
        merged = np.zeros((uniq.size, k), dtype=complex)
        np.add.at(merged, inv, coef)
        self.omega = uniq + 0.0
        self.coef = merged
        self.beta0 += beta

    def integrate_from(self, X):
        """Return (value, error estimate) of int_X^inf of the expansion."""
        k = self.order + 1
        betas = self.beta0 + np.arange(k)
        scale = np.max(np.abs(self.coef)) if self.coef.size else 0.0
        total = 0.0 + 0j
        magnitude = 0.0
        zero = self.omega == 0.0
        if zero.any():
            c = self.coef[zero][0]
            for q in range(k):
                if c[q] == 0:
                    continue
                if betas[q] <= 1.0:
                    # real-valued integrand: exact cancellation leaves a tiny residue
                    if abs(c[q]) <= 1e-13 * scale:
                        continue
                    raise DivergentIntegralError(
                        "integrand has a non-oscillating component decaying no faster than 1/s")
                term = c[q] * X ** (1.0 - betas[q]) / (betas[q] - 1.0)
                total += term
                magnitude += abs(term)
        if self.beta0 <= 0:
            raise DivergentIntegralError("integrand does not decay")
        pos = np.abs(self.omega[~zero])
        keys = np.unique(pos)
        if keys.size:
            plus = np.zeros((keys.size, k), dtype=complex)
            minus = np.zeros((keys.size, k), dtype=complex)
            nz = ~zero
            idx = np.searchsorted(keys, pos)
            pos_side = self.omega[nz] > 0
            plus[idx[pos_side]] = self.coef[nz][pos_side]
            minus[idx[~pos_side]] = np.conj(self.coef[nz][~pos_side])
            sp, sm = _contour_sums(keys * X, self.beta0, [plus, minus], X)
            total += np.sum(sp + np.conj(sm))
            magnitude += float(np.abs(sp).sum() + np.abs(sm).sum())
        # rounding in the closed-form terms, plus the truncation proxy
        trunc = 0.0
        if self.order > 0:
            last = np.abs(self.coef[:, -1]).sum()
            bl = betas[-1]
            trunc = last * X ** (1.0 - bl) / max(bl - 1.0, 1e-3)
        return total.real, 64 * np.finfo(float).eps * magnitude + trunc


# -- chunked direct part ------------------------------------------------------

def _chunked_gl(func, length, count, order):
    """Integrate func over [0, count*length] in chunks; returns (value, err, chunks)."""
    x, w = _gauss_legendre(order)
    xh, wh = _gauss_legendre(order // 2)
    total = 0.0
    err = 0.0
    block = max(1, 200000 // order)
    for start in range(0, count, block):
        stop = min(count, start + block)
        left = (np.arange(start, stop) * length)[:, None]
        nodes = left + 0.5 * length * (x + 1.0)
        vals = func(nodes.ravel()).reshape(nodes.shape)
        full = 0.5 * length * (vals @ w)
        nodes_h = left + 0.5 * length * (xh + 1.0)
        vals_h = func(nodes_h.ravel()).reshape(nodes_h.shape)
        half = 0.5 * length * (vals_h @ wh)
        total += math.fsum(full)
        err += float(np.abs(full - half).sum())
    return total, err


def _chunk_count(x_cut, length, spec):
    # tiny weights push the cut point to overflow; the budget caps it
    ratio = x_cut / length
    if not ratio < spec.max_periods:
        return spec.max_periods
    return max(1, int(math.ceil(ratio)))


def _effective(weights, skip_index):
    a = np.abs(np.asarray(weights, dtype=float))
    if a.ndim != 1:
        raise ValueError("weights must be a one-dimensional sequence")
    if np.isnan(a).any():
        raise ValueError("weights must be finite")
    if skip_index is not None:
        if not 1 <= skip_index <= a.size:
            raise ValueError("skip_index out of range")
        a = np.delete(a, skip_index - 1)
    return a[a > 0]


# -- sinc products --------------------------------------------------------------

def integrate_sinc_product_cos(weights: Sequence[float], cos_weight: float = 0.0,
                               skip_index: Optional[int] = None,
                               spec: QuadratureSpec = DEFAULT_SPEC) -> QuadratureResult:
    """(2/pi) int_0^inf prod_{k != skip} sinc(a_k s) cos(c s) ds.

    ``c`` is ``cos_weight`` unless ``skip_index`` (1-based) is given, in
    which case it is the skipped weight.  Zero weights contribute factor 1.

    Raises
    ------
    DivergentIntegralError
        If no positive weight remains in the product.
    """
    raw = np.abs(np.asarray(weights, dtype=float))
    c = abs(float(raw[skip_index - 1])) if skip_index is not None else abs(float(cos_weight))
    a = _effective(raw, skip_index)
    m = a.size
    if m == 0:
        raise DivergentIntegralError("no sinc factor: the integral diverges")

    exp = _Expansion(0)
    for ak in a:
        # sinc(a s) = s^-1 [e^{ias} - e^{-ias}] / (2 i a)
        coef = 1.0 / (2j * ak)
        exp.multiply(ak, 1.0, [coef], [-coef])
    if c > 0:
        exp.multiply(c, 0.0, [0.5], [0.5])

    top = float(a.sum() + c)
    length = math.pi / top
    # cut point: keep the expansion terms free of cancellation
    prod_a = float(np.prod(a))
    x_cut = 4.0 * length
    if m >= 2:
        x_cut = max(x_cut, (1e-2 / prod_a) ** (1.0 / (m - 1)) if prod_a > 0 else math.inf)
    count = _chunk_count(x_cut, length, spec)
    x_cut = count * length

    def integrand(s):
        out = np.cos(c * s) if c > 0 else np.ones_like(s)
        for ak in a:
            out = out * sinc(ak * s)
        return out

    head, head_err = _chunked_gl(integrand, length, count, spec.points_per_period)
    tail, tail_err = exp.integrate_from(x_cut)
    value = 2.0 / math.pi * (head + tail)
    err = 2.0 / math.pi * (head_err + tail_err)
    return QuadratureResult(value, err, count, 2.0 / math.pi * tail_err,
                            err <= spec.tolerance(value))


# -- Bessel products ------------------------------------------------------------

_HANKEL_ORDER = 16
_HANKEL_X = 25.0
_ZETA8 = np.exp(-0.25j * math.pi * np.arange(8))
_ZETA8[2], _ZETA8[4], _ZETA8[6] = -1j, -1.0, 1j


def _zeta_pow(n):
    # exact e^{-i n pi/4} for the multiples that are exact in binary
    return _ZETA8[n % 8]


def _bessel_series(nu, freq, order, sign):
    """Coefficients of s^-q in the Hankel series for J_nu(freq s), one sign."""
    a = hankel_coefficients(nu, order + 1)
    q = np.arange(order + 1)
    ipow = np.array([1, 1j, -1, -1j])[(sign * q) % 4]
    return a * ipow * freq ** (-q.astype(float))


# sup x^{3/2} |j1c(x)| and sup x^{1/2} |J0(x)|, rounded up
_J1C_ENV = 1.66
_J0_ENV = 0.8
_ENVELOPE_TARGET = 1e-16


def _envelope_bound(a, c, x):
    """Bound on int_x^inf s prod|j1c(a_k s)| |J0(c s)| ds using factors that decay."""
    logc = 0.0
    beta = -1.0
    for ak in a:
        if _J1C_ENV * (ak * x) ** -1.5 < 1.0:
            logc += math.log(_J1C_ENV) - 1.5 * math.log(ak)
            beta += 1.5
    if c > 0 and _J0_ENV * (c * x) ** -0.5 < 1.0:
        logc += math.log(_J0_ENV) - 0.5 * math.log(c)
        beta += 0.5
    if beta <= 1.0:
        return math.inf
    return math.exp(logc + (1.0 - beta) * math.log(x)) / (beta - 1.0)


def _envelope_cut(a, c, target, limit):
    """First point of a geometric grid where the envelope bound is below target."""
    x = 4.0 / float(a.max())
    while x < limit:
        if _envelope_bound(a, c, x) <= target:
            return x
        x *= 1.25
    return None


def integrate_j1c_product_J0(weights: Sequence[float], J0_weight: float = 0.0,
                             skip_index: Optional[int] = None,
                             spec: QuadratureSpec = DEFAULT_SPEC) -> QuadratureResult:
    """(1/2) int_0^inf prod_{k != skip} j1c(a_k s) J0(c s) s ds.

    ``c`` is ``J0_weight`` unless ``skip_index`` (1-based) is given.  The
    factor J0(0 s) = 1 is dropped when c = 0.

    Raises
    ------
    DivergentIntegralError
        If no positive weight remains or the tail does not converge.
    """
    raw = np.abs(np.asarray(weights, dtype=float))
    c = abs(float(raw[skip_index - 1])) if skip_index is not None else abs(float(J0_weight))
    a = _effective(raw, skip_index)
    m = a.size
    if m == 0:
        raise DivergentIntegralError("no j1c factor: the integral diverges")

    order = _HANKEL_ORDER
    exp = _Expansion(order)
    amp = math.sqrt(2.0 / math.pi)
    for ak in a:
        # j1c(a s) = sqrt(2/pi) (a s)^{-3/2} [e^{i(as - 3pi/4)} S + c.c.]
        base = amp * ak ** -1.5
        exp.multiply(ak, 1.5,
                     base * _zeta_pow(3) * _bessel_series(1, ak, order, 1),
                     base * _zeta_pow(-3) * _bessel_series(1, ak, order, -1))
    if c > 0:
        base = 0.5 * amp * c ** -0.5
        exp.multiply(c, 0.5,
                     base * _zeta_pow(1) * _bessel_series(0, c, order, 1),
                     base * _zeta_pow(-1) * _bessel_series(0, c, order, -1))
    exp.beta0 -= 1.0  # the measure s ds

    top = float(a.sum() + c)
    length = math.pi / top
    low = float(a.min()) if c == 0 else min(float(a.min()), c)
    x_asym = max(_HANKEL_X / low, 4.0 * length)
    # small weights push the asymptotic regime far out; often the envelope
    # of the remaining factors is already negligible much earlier
    x_env = _envelope_cut(a, c, _ENVELOPE_TARGET, x_asym)
    use_env = x_env is not None
    x_cut = x_env if use_env else x_asym
    count = _chunk_count(x_cut, length, spec)
    x_cut = count * length

    def integrand(s):
        out = s * (bessel_j0(c * s) if c > 0 else 1.0)
        for ak in a:
            out = out * j1c(ak * s)
        return out

    head, head_err = _chunked_gl(integrand, length, count, spec.points_per_period)
    if use_env:
        tail, tail_err = 0.0, _envelope_bound(a, c, x_cut)
    else:
        tail, tail_err = exp.integrate_from(x_cut)
    value = 0.5 * (head + tail)
    err = 0.5 * (head_err + tail_err)
    return QuadratureResult(value, err, count, 0.5 * tail_err,
                            err <= spec.tolerance(value))


# -- |sinc|^p products -----------------------------------------------------------

def _sin_power_moments(p, count, h=1.0 / 64):
    """m_j = int_0^pi sin(v)^p v^j dv for j < count."""
    nodes, w = _tanh_sinh_nodes(np.array([0.0]), np.array([math.pi]), h)
    nodes, w = nodes.ravel(), w.ravel()
    base = w * np.sin(nodes) ** p
    return np.array([np.sum(base * nodes ** j) for j in range(count)])


def _binom_neg(p, count):
    # binom(-p, j) for j < count
    out = np.empty(count)
    out[0] = 1.0
    for j in range(1, count):
        out[j] = out[j - 1] * (-p - j + 1) / j
    return out


def _single_abs_power(p, arches=16):
    """int_0^inf |sinc(x)|^p dx, directly on the first arches, Hurwitz zeta beyond."""
    from scipy.special import zeta

    k = np.arange(arches)
    left = np.concatenate([[0.0, 0.25 * math.pi, 0.5 * math.pi, 0.75 * math.pi], k[1:] * math.pi])
    right = np.concatenate([[0.25 * math.pi, 0.5 * math.pi, 0.75 * math.pi, math.pi], (k[1:] + 1) * math.pi])
    nodes, w = _tanh_sinh_nodes(left, right, 1.0 / 32)
    head = math.fsum((w * np.abs(sinc(nodes)) ** p).ravel())

    terms = 40
    mom = _sin_power_moments(p, terms)
    b = _binom_neg(p, terms)
    j = np.arange(terms)
    series = b * mom * math.pi ** (-p - j) * zeta(p + j, arches)
    tail = math.fsum(series)
    return head + tail, abs(series[-1]) + 1e-15 * (head + tail)


def _mean_abs_sin_power(p):
    # average of |sin|^p over a period
    return math.exp(math.lgamma(0.5 * (p + 1)) - math.lgamma(0.5 * p + 1)) / math.sqrt(math.pi)


def _multi_abs_power(a, p, x_cut):
    zeros = [np.arange(1, int(x_cut * ak / math.pi) + 1) * (math.pi / ak) for ak in a]
    pts = np.unique(np.concatenate([[0.0, x_cut]] + zeros))
    pts = pts[pts <= x_cut]
    nodes, w = _tanh_sinh_nodes(pts[:-1], pts[1:], 1.0 / 8)
    vals = np.ones_like(nodes)
    for ak in a:
        vals = vals * np.abs(sinc(ak * nodes)) ** p
    head = math.fsum((w * vals).ravel())
    m = a.size
    mean = _mean_abs_sin_power(p) ** m / float(np.prod(a)) ** p
    envelope = float(np.prod(a)) ** (-p)
    expo = m * p - 1.0
    tail = mean * x_cut ** (-expo) / expo
    bound = envelope * x_cut ** (-expo) / expo
    return head, tail, bound, pts.size - 1


def integrate_abs_power(weights: Sequence[float], exponent: float,
                        spec: QuadratureSpec = DEFAULT_SPEC) -> QuadratureResult:
    """(2/pi) int_0^inf prod_k |sinc(a_k s)|^p ds.

    A single weight is handled with an exact zeta-function tail.  Several
    weights use chunks between the merged zeros and a mean-value tail; the
    error estimate compares two cut points.

    Raises
    ------
    DivergentIntegralError
        If p times the number of positive weights is at most 1.
    """
    p = float(exponent)
    a = _effective(weights, None)
    m = a.size
    if m == 0 or m * p <= 1.0:
        raise DivergentIntegralError("tail of |sinc|^p product is not integrable")
    if m == 1 or np.all(a == a[0]):
        # prod |sinc(a s)|^p with equal weights is |sinc|^{mp} rescaled
        val, err = _single_abs_power(m * p)
        value = 2.0 / math.pi * val / a[0]
        err = 2.0 / math.pi * err / a[0]
        return QuadratureResult(value, err, 16, err, err <= spec.tolerance(value))
    # the mean-value tail leaves an oscillating remainder; its size is
    # estimated by moving the cut point
    x_cut = max(100.0 / float(a.min()), 50.0)
    chunks_cap = min(spec.max_periods, 400000)
    prev = _multi_abs_power(a, p, x_cut)
    while True:
        x_cut *= 2.0
        cur = _multi_abs_power(a, p, x_cut)
        diff = abs((prev[0] + prev[1]) - (cur[0] + cur[1]))
        scaled = 2.0 / math.pi * diff
        if scaled <= spec.tolerance(2.0 / math.pi * cur[0]) or 2 * cur[3] > chunks_cap:
            break
        prev = cur
    head, tail, bound, chunks = cur
    value = 2.0 / math.pi * (head + tail)
    return QuadratureResult(value, scaled, chunks, 2.0 / math.pi * bound,
                            scaled <= spec.tolerance(value))


# -- general driver ------------------------------------------------------------------

def _euler_average(partial):
    """Repeated pairwise averaging of partial sums (Euler transform)."""
    row = np.array(partial, dtype=float)
    while row.size > 1:
        row = 0.5 * (row[:-1] + row[1:])
    return float(row[0])


def integrate_semi_infinite(f: Callable, period_hint: float,
                            spec: QuadratureSpec = DEFAULT_SPEC, *,
                            decay: Optional[float] = None,
                            tail: Optional[Sequence[tuple]] = None) -> QuadratureResult:
    """int_0^inf f(x) dx for a vectorized integrand f.

    Parameters
    ----------
    f : callable
        Vectorized integrand.  Optional attributes ``f.decay`` and
        ``f.tail`` supply the same information as the keyword arguments.
    period_hint : float
        Chunk length; chunks should eventually alternate in sign when Euler
        acceleration is requested.
    decay : float, optional
        Exponent p of an envelope |f(x)| <= C x^-p used for the tail bound.
        Defaults to 2.
    tail : sequence of (coef, beta, omega), optional
        Exact representation f(x) = Re sum coef x^-beta e^{i omega x} valid
        beyond the first few chunks.  The tail is then integrated in closed
        form.

    Notes
    -----
    Without ``tail`` the envelope constant C is measured on the last block
    of chunks, so the bound is empirical.  Integrands decaying like 1/x^2
    need about 1/abs_tol chunks that way and will usually stop unconverged.
    """
    if not period_hint > 0:
        raise ValueError("period_hint must be positive")
    decay = getattr(f, "decay", None) if decay is None else decay
    tail = getattr(f, "tail", None) if tail is None else tail
    order = spec.points_per_period
    x, w = _gauss_legendre(order)
    xh, wh = _gauss_legendre(order // 2)
    L = float(period_hint)

    def chunk_block(start, stop):
        left = (np.arange(start, stop) * L)[:, None]
        nodes = left + 0.5 * L * (x + 1.0)
        full = 0.5 * L * (np.asarray(f(nodes.ravel()), dtype=float).reshape(nodes.shape) @ w)
        nodes_h = left + 0.5 * L * (xh + 1.0)
        half = 0.5 * L * (np.asarray(f(nodes_h.ravel()), dtype=float).reshape(nodes_h.shape) @ wh)
        return full, np.abs(full - half), nodes, w

    if tail is not None:
        count = min(8, spec.max_periods)
        full, err, _, _ = chunk_block(0, count)
        X = count * L
        t_val, t_mag = 0.0, 0.0
        for coef, beta, omega in tail:
            term = complex(coef) * power_exp_tail(float(beta), float(omega), X)
            t_val += term.real
            t_mag += abs(term)
        value = math.fsum(full) + t_val
        t_err = 64 * np.finfo(float).eps * t_mag
        est = float(err.sum()) + t_err
        return QuadratureResult(value, est, count, t_err, est <= spec.tolerance(value))

    p = 2.0 if decay is None else float(decay)
    if p <= 1.0 and spec.acceleration == "none":
        raise DivergentIntegralError("envelope decay must exceed 1 without acceleration")
    chunks, errs = [], []
    block = 64
    done = 0
    tol = spec.abs_tol
    prev_acc = None
    while done < spec.max_periods:
        stop = min(spec.max_periods, done + block)
        full, err, nodes, _ = chunk_block(done, stop)
        chunks.extend(full.tolist())
        errs.extend(err.tolist())
        done = stop
        X = done * L
        quad_err = math.fsum(errs)
        if spec.acceleration == "euler_alternating":
            start = max(0, len(chunks) - 48)
            partial = np.cumsum(chunks)[start:]
            acc = _euler_average(partial)
            acc2 = _euler_average(partial[:-1])
            diff = abs(acc - acc2)
            value = acc
            tail_b = diff
            if prev_acc is not None:
                tail_b = max(tail_b, abs(acc - prev_acc))
            prev_acc = acc
            est = quad_err + tail_b
            if tail_b < tol and est <= spec.tolerance(value):
                return QuadratureResult(value, est, done, tail_b, True)
        else:
            last = nodes[-min(8, nodes.shape[0]):].ravel()
            env = float(np.max(np.abs(f(last)) * last ** p))
            tail_b = env * X ** (1.0 - p) / (p - 1.0)
            value = math.fsum(chunks)
            est = quad_err + tail_b
            if tail_b < tol and est <= spec.tolerance(value):
                return QuadratureResult(value, est, done, tail_b, True)
        block = min(block * 2, 1 << 16)
    return QuadratureResult(value, est, done, tail_b, False)
