"""Searches and sweeps around the maximal-perimeter direction.

* ``search_max_perimeter`` maximizes P over canonical directions by a grid
  over the simplex of squared coordinates followed by Nelder-Mead polish.
* ``check_lower_bound`` tests P(a) >= 2 pi^(l-1) (n-2).
* ``lemma10_check`` evaluates the two-factor Hoelder integral near a_max.
* ``interpolation_sweep`` evaluates the interpolation bounds built from
  Ball's function near a1 = 1/sqrt 2 and checks their monotonicity,
  endpoint values, crossing point and exceptional windows.

Convention: every ``gamma*`` function below returns a bound for P(a)/2
directly, so gamma(1/sqrt 2, 1/sqrt 2) = (n-2) sqrt 2 + 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.optimize import brentq, minimize

from .oscint import DEFAULT_SPEC, QuadratureSpec, integrate_abs_power
from .report import VerificationReport, close, lower, upper
from .sections import (Direction, a_max, canonicalize, perimeter,
                       perimeter_at_a_max, section_volume)

__all__ = [
    "SearchConfig",
    "ExtremalReport",
    "search_max_perimeter",
    "check_lower_bound",
    "lemma10_check",
    "PAIR_BOUND",
    "PAIR_BOX",
    "concavity_bound",
    "gap_excess",
    "GAP_LIMIT",
    "phi1",
    "phi2",
    "psi1",
    "psi2",
    "gamma",
    "gamma1",
    "gamma2",
    "crossing_a1",
    "exception_window",
    "a2_threshold",
    "interpolation_sweep",
]

SQRT2 = math.sqrt(2.0)
SQRT_3_OVER_PI = math.sqrt(3.0 / math.pi)
A1_LOW = math.sqrt(SQRT2 - 1.0)            # ~0.6436
A1_HIGH = 1.0 / math.sqrt(SQRT2 + 0.5)     # ~0.7228
A1_MID = 1.0 / SQRT2
GAP_LIMIT = 2.0 * (0.75 * SQRT2 - 1.0)     # ~0.1213


# -- maximal perimeter search ------------------------------------------------

@dataclass(frozen=True)
class SearchConfig:
    """Settings for ``search_max_perimeter``.

    Grid points are a_k = sqrt(m_k / R) for every partition (m_k) of
    R = ``grid_resolution`` into at most n parts.  The best grid points seed
    ``multistarts`` Nelder-Mead runs (with seeded jitter) in the variables
    x, a = |x| / |x|_2 sorted.  Coordinates below ``snap`` are set to zero
    before evaluation, so every evaluated point is an exact canonical
    direction; the strip of directions with a coordinate in (0, snap) is not
    sampled.  Perimeter slopes away from the zero strata are of order one,
    and quadrature cost grows like 1/a_n for the polydisc.
    """

    n: int
    field: str = "real"
    grid_resolution: int = 12
    multistarts: int = 50
    local_tol: float = 1e-8
    seed: int = 0
    max_local_evals: int = 400
    jitter: float = 0.02
    snap: float = 0.02
    spec: QuadratureSpec = DEFAULT_SPEC

    def __post_init__(self):
        if not 3 <= self.n <= 8:
            raise ValueError("n must lie in [3, 8]")
        if self.field not in ("real", "complex"):
            raise ValueError("field must be 'real' or 'complex'")
        if self.grid_resolution < 10:
            raise ValueError("grid_resolution must be at least 10")
        if self.multistarts < 1:
            raise ValueError("multistarts must be positive")
        if not self.local_tol > 0:
            raise ValueError("local_tol must be positive")
        if not 0 <= self.snap < 0.5:
            raise ValueError("snap must lie in [0, 0.5)")


@dataclass(frozen=True)
class ExtremalReport:
    """Outcome of a maximal-perimeter search."""

    best_direction: Direction
    best_value: float
    target_value: float
    margin: float
    evaluations: int

    @property
    def distance_to_a_max(self) -> float:
        ref = np.array(a_max(self.best_direction.n).coords)
        return float(np.linalg.norm(self.best_direction.as_array() - ref))


def _partitions(total, parts, largest=None):
    """Nonincreasing tuples of positive integers summing to total, length <= parts."""
    if largest is None:
        largest = total
    if total == 0:
        yield ()
        return
    if parts == 0:
        return
    for first in range(min(total, largest), 0, -1):
        for rest in _partitions(total - first, parts - 1, first):
            yield (first,) + rest


def _grid_directions(n, resolution, field):
    out = []
    for part in _partitions(resolution, n):
        coords = [math.sqrt(m / resolution) for m in part] + [0.0] * (n - len(part))
        out.append(canonicalize(coords, field))
    return out


class _Objective:
    """Perimeter of the canonicalized |x| with memoization and a counter."""

    def __init__(self, field, spec, snap=0.0):
        self.field = field
        self.spec = spec
        self.snap = snap
        self.cache = {}
        self.evaluations = 0

    def direction(self, x) -> Optional[Direction]:
        x = np.abs(np.asarray(x, dtype=float))
        if not np.any(x > 0):
            return None
        d = canonicalize(x, self.field)
        if self.snap > 0 and d.coords[-1] < self.snap:
            y = np.array(d.coords)
            y[y < self.snap] = 0.0
            d = canonicalize(y, self.field)
        return d

    def value(self, d: Direction) -> float:
        key = d.coords
        if key not in self.cache:
            self.evaluations += 1
            self.cache[key] = perimeter(d, self.spec)
        return self.cache[key]

    def __call__(self, x) -> float:
        d = self.direction(x)
        return math.inf if d is None else -self.value(d)


def search_max_perimeter(cfg: SearchConfig) -> ExtremalReport:
    """Maximize the central-section perimeter over canonical directions."""
    obj = _Objective(cfg.field, cfg.spec, cfg.snap)
    grid = _grid_directions(cfg.n, cfg.grid_resolution, cfg.field)
    ranked = sorted(grid, key=lambda d: -obj.value(d))
    best_dir = ranked[0]
    best_val = obj.value(best_dir)

    rng = np.random.default_rng(cfg.seed)
    starts = min(cfg.multistarts, len(ranked))
    for i in range(cfg.multistarts):
        base = ranked[i % starts].as_array()
        x0 = base + cfg.jitter * rng.standard_normal(cfg.n) * (i >= starts)
        simplex = [x0] + [x0 + 0.05 * np.eye(cfg.n)[k] for k in range(cfg.n)]
        res = minimize(obj, x0, method="Nelder-Mead",
                       options={"initial_simplex": np.array(simplex), "xatol": cfg.local_tol,
                                "fatol": cfg.local_tol, "maxfev": cfg.max_local_evals})
        d = obj.direction(res.x)
        if d is not None and obj.value(d) > best_val:
            best_dir, best_val = d, obj.value(d)

    target = perimeter_at_a_max(cfg.n, cfg.field)
    return ExtremalReport(best_dir, best_val, target, target - best_val, obj.evaluations)


# -- lower bound -------------------------------------------------------------

def check_lower_bound(a: Direction, spec: QuadratureSpec = DEFAULT_SPEC,
                      tol: float = 1e-6) -> VerificationReport:
    """Check P(a) >= 2 pi^(l-1) (n-2).

    The larger value 2 pi^(l-1) (n-1) attained at a_min is recorded in
    ``info`` as an observation only.
    """
    if a.n < 3:
        raise ValueError("perimeter requires n >= 3")
    p = perimeter(a, spec)
    scale = 2.0 * math.pi ** (a.l - 1)
    report = VerificationReport("lower_bound")
    report.add(lower("P >= 2 pi^(l-1) (n-2)", p, scale * (a.n - 2), tol,
                     direction=list(a.coords), field=a.field))
    report.info["a_min_value"] = scale * (a.n - 1)
    report.info["above_a_min_value"] = p >= scale * (a.n - 1) - tol
    return report


# -- two-factor Hoelder integral -------------------------------------------------

PAIR_BOUND = 0.985 * SQRT2
PAIR_BOX = ((0.7095, 0.7149), (1.0 / math.sqrt(10.0), 0.5803))
_PAIR_SPEC = QuadratureSpec(abs_tol=1e-7, rel_tol=1e-7)


def lemma10_check(a1: float, a2: float, spec: QuadratureSpec = _PAIR_SPEC) -> float:
    """(2/pi) int_0^inf |sinc(a1 s) sinc(a2 s)|^(1/(a1^2 + a2^2)) ds.

    Inputs must lie in the box a1 in [0.7095, 0.7149],
    a2 in [1/sqrt 10, 0.5803]; the claim is value <= ``PAIR_BOUND``.
    """
    (lo1, hi1), (lo2, hi2) = PAIR_BOX
    slack = 1e-12
    if not (lo1 - slack <= a1 <= hi1 + slack and lo2 - slack <= a2 <= hi2 + slack):
        raise ValueError("(a1, a2) outside the admissible box")
    p = 1.0 / (a1 * a1 + a2 * a2)
    res = integrate_abs_power([a1, a2], p, spec)
    if not res.converged:
        raise RuntimeError(f"two-factor integral did not converge (est. error {res.est_error:.3g})")
    return float(res.value)


# -- concavity chain -----------------------------------------------------------

def concavity_bound(a: Direction, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """(n-1) sqrt(1 - (1-a1^2)/(n-1)) A(a), an upper bound for P(a)/2 (real)."""
    n, a1 = a.n, a.coords[0]
    return (n - 1) * math.sqrt(1.0 - (1.0 - a1 * a1) / (n - 1)) * section_volume(a, 0.0, spec)


def gap_excess(a: Direction, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """P(a)/2 - ((n-2) sqrt 2 + 1); at most ``GAP_LIMIT`` by the crude bounds."""
    return 0.5 * perimeter(a, spec) - ((a.n - 2) * SQRT2 + 1.0)


# -- interpolation bounds ------------------------------------------------------

def phi2(a):
    """Chord bound for a^2 f(a^-2) between p = 2 and p = 9/4."""
    a2 = np.square(a)
    return (9 * a2 - 4) + (4 - 8 * a2) * SQRT_3_OVER_PI


def phi1(a):
    """Chord bound for a^2 f(a^-2) between p = sqrt2 + 1/2 (f <= 51/50) and p = 2."""
    a2 = np.square(a)
    return (1 - (SQRT2 + 0.5) * a2 + (2 * a2 - 1) * 51 / 50) / (1.5 - SQRT2)


def psi1(a1, a2=None):
    """A(a)/sqrt 2 bound for a1 <= 1/sqrt 2 (with a2 >= 2/3 when a2 is given)."""
    s1 = np.square(a1)
    if a2 is None:
        return (9 * s1 - 4) + (5 - 9 * s1) * SQRT_3_OVER_PI
    s = s1 + np.square(a2)
    return 9 * s - 8 + 9 * (1 - s) * SQRT_3_OVER_PI


def psi2(a1, a2=None):
    """A(a)/sqrt 2 bound for 1/sqrt 2 < a1 <= 1/sqrt(sqrt2 + 1/2)."""
    s1 = np.square(a1)
    if a2 is None:
        return phi1(a1) + (1 - s1) * SQRT_3_OVER_PI
    return (1 - s1 - np.square(a2)) * SQRT_3_OVER_PI + phi2(a2) + phi1(a1)


def _weight(n, a1, a2=None):
    """Bound for sum_{k>=2} sqrt(1 - a_k^2) by concavity."""
    if a2 is None:
        return (n - 1) * np.sqrt(1 - (1 - np.square(a1)) / (n - 1))
    return n - 2 - (1 - np.square(a1) - np.square(a2)) / 2 + np.sqrt(1 - np.square(a2))


def _weight_sharp(n, a1, a2):
    return (n - 2) * np.sqrt(1 - (1 - np.square(a1) - np.square(a2)) / (n - 2)) + np.sqrt(1 - np.square(a2))


def gamma(n, a1, a2=None):
    """P/2 bound for a1 <= 1/sqrt 2 via psi1."""
    return _weight(n, a1, a2) * psi1(a1, a2) * SQRT2


def gamma1(n, a1, a2=None):
    """P/2 bound for a1 > 1/sqrt 2 via psi2."""
    return _weight(n, a1, a2) * psi2(a1, a2) * SQRT2


def gamma2(n, a1, a2=None):
    """P/2 bound for a1 > 1/sqrt 2 via A <= 1/a1."""
    return _weight(n, a1, a2) / a1


def crossing_a1() -> float:
    """a1 in (1/sqrt 2, 1/sqrt(sqrt2+1/2)) where gamma1 = gamma2 (independent of n)."""
    return brentq(lambda x: psi2(x) * SQRT2 - 1.0 / x, A1_MID, A1_HIGH, xtol=1e-15)


def exception_window(n: int, include_low_branch: bool = False):
    """Interval of a1 where min(gamma1, gamma2) exceeds (n-2) sqrt 2 + 1, or None.

    With ``include_low_branch`` the a1 <= 1/sqrt 2 bound gamma is also used,
    which can move the left end below 1/sqrt 2 (this happens for n = 4).
    """
    target = (n - 2) * SQRT2 + 1.0
    abar = crossing_a1()
    if gamma1(n, abar) <= target:
        return None
    lo = brentq(lambda x: gamma1(n, x) - target, A1_MID, abar, xtol=1e-14) \
        if gamma1(n, A1_MID) < target else A1_MID
    hi = brentq(lambda x: gamma2(n, x) - target, abar, A1_HIGH, xtol=1e-14)
    if include_low_branch and gamma(n, A1_MID) > target:
        lo = brentq(lambda x: gamma(n, x) - target, A1_LOW, A1_MID, xtol=1e-14)
    return lo, hi


def a2_threshold(n: int, points: int = 20001) -> float:
    """Smallest a2 above which the two-coordinate bound closes the gap for all a1 > 1/sqrt 2."""
    target = (n - 2) * SQRT2 + 1.0
    x = np.linspace(A1_MID, A1_HIGH, points)
    m = np.minimum(psi2(x) * SQRT2, 1.0 / x)

    def worst(a2):
        return float(np.max(_weight_sharp(n, x, a2) * m)) - target

    return brentq(worst, 0.3, 2.0 / 3.0, xtol=1e-12)


_PUBLISHED_WINDOWS = {5: (0.7095, 0.7149), 6: (0.7115, 0.7133)}
_PUBLISHED_VIOLATION = {5: 0.015, 6: 0.006}
_PUBLISHED_A2 = {5: 0.5803, 6: 0.4952}
_PUBLISHED_N4_WINDOW = (0.7069, 0.7177)
_PUBLISHED_ABAR = 0.71254


def _grid(lo, hi, step):
    g = np.arange(lo, hi, step)
    return np.append(g, hi)


def interpolation_sweep(n: int, step: float = 1e-3, tol: float = 1e-9) -> VerificationReport:
    """Evaluate the interpolation bounds for dimension n >= 4 and check their claims."""
    if n < 4:
        raise ValueError("n must be at least 4")
    target = (n - 2) * SQRT2 + 1.0
    rep = VerificationReport(f"interpolation_n{n}")

    # two large coordinates, a1 <= 1/sqrt 2
    rep.add(close("gamma(1/sqrt2, 1/sqrt2) = (n-2) sqrt2 + 1", gamma(n, A1_MID, A1_MID), target, tol, n=n))
    g = _grid(2.0 / 3.0, A1_MID, step)
    A1, A2 = np.meshgrid(g, g, indexing="ij")
    G = np.where(A2 <= A1, gamma(n, A1, A2), np.nan)
    rep.add(lower("gamma increasing in a1", np.nanmin(np.diff(G, axis=0)), 0.0, tol, n=n))
    rep.add(lower("gamma increasing in a2", np.nanmin(np.diff(G, axis=1)), 0.0, tol, n=n))
    rep.add(upper("gamma <= target on 2/3 <= a2 <= a1 <= 1/sqrt2", np.nanmax(G), target, tol, n=n))

    # two large coordinates, a1 > 1/sqrt 2
    h = _grid(A1_MID, A1_HIGH, step)
    B1, B2 = np.meshgrid(h, g, indexing="ij")
    G1, G2 = gamma1(n, B1, B2), gamma2(n, B1, B2)
    rep.add(lower("gamma1 increasing in a1", np.diff(G1, axis=0).min(), 0.0, tol, n=n))
    rep.add(lower("gamma1 increasing in a2", np.diff(G1, axis=1).min(), 0.0, tol, n=n))
    rep.add(upper("gamma2 decreasing in a1", np.diff(G2, axis=0).max(), 0.0, tol, n=n))
    rep.add(upper("gamma2 decreasing in a2", np.diff(G2, axis=1).max(), 0.0, tol, n=n))
    # the line 1/sqrt2 - a2 = 8 (a1 - 1/sqrt2) down to a2 = 2/3
    t = _grid(A1_MID, (9.0 / SQRT2 - 2.0 / 3.0) / 8.0, step / 8.0)
    L1, L2 = gamma1(n, t, 9.0 / SQRT2 - 8 * t), gamma2(n, t, 9.0 / SQRT2 - 8 * t)
    rep.add(upper("gamma1 decreasing along the line", np.diff(L1).max(), 0.0, tol, n=n))
    rep.add(upper("gamma2 decreasing along the line", np.diff(L2).max(), 0.0, tol, n=n))
    rep.add(upper("max gamma1 on the line <= target", L1.max(), target, tol, n=n))
    rep.add(upper("max gamma2 on the line <= target", L2.max(), target, tol, n=n))

    # one large coordinate, a1 <= 1/sqrt 2
    x = _grid(A1_LOW, A1_MID, step)
    gx = gamma(n, x)
    rep.add(lower("gamma(a1) increasing", np.diff(gx).min(), 0.0, tol, n=n))
    if n >= 5:
        rep.add(upper("gamma(1/sqrt2) < target", gamma(n, A1_MID), target, 0.0, n=n))
    rep.info["gamma_at_mid_minus_target"] = float(gamma(n, A1_MID) - target)

    # one large coordinate, a1 > 1/sqrt 2
    gx1, gx2 = gamma1(n, h), gamma2(n, h)
    rep.add(lower("gamma1(a1) increasing", np.diff(gx1).min(), 0.0, tol, n=n))
    rep.add(upper("gamma2(a1) decreasing", np.diff(gx2).max(), 0.0, tol, n=n))
    abar = crossing_a1()
    rep.info["crossing_a1"] = abar
    rep.add(close("crossing a1", abar, _PUBLISHED_ABAR, 5e-4))
    peak = float(gamma1(n, abar))
    rep.info["peak_minus_target"] = peak - target
    window = exception_window(n)
    rep.info["window"] = window
    if n >= 7:
        rep.add(upper("gamma1(abar) <= target", peak, target, 0.0, n=n))
    elif n in _PUBLISHED_WINDOWS:
        lo, hi = _PUBLISHED_WINDOWS[n]
        rep.add(close("window left end", window[0], lo, 5e-4, n=n))
        rep.add(close("window right end", window[1], hi, 5e-4, n=n))
        rep.add(upper("violation size", peak - target, _PUBLISHED_VIOLATION[n], 0.0, n=n))
        thr = a2_threshold(n)
        rep.info["a2_threshold"] = thr
        rep.add(close("a2 threshold", thr, _PUBLISHED_A2[n], 5e-4, n=n))
        # closing estimate once the two-factor integral is <= 0.985 sqrt 2
        closing = _weight(n, hi) * PAIR_BOUND
        rep.add(upper("closing estimate < target", closing, target, 0.0, n=n))
    else:
        full = exception_window(n, include_low_branch=True)
        rep.info["window_with_low_branch"] = full
        rep.add(close("window left end (both branches)", full[0], _PUBLISHED_N4_WINDOW[0], 5e-4, n=n))
        rep.add(close("window right end (both branches)", full[1], _PUBLISHED_N4_WINDOW[1], 5e-4, n=n))
    return rep
