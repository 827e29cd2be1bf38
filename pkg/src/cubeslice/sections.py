"""Central and offset sections of the unit cube and the polydisc.

A direction a is a unit vector with nonnegative, nonincreasing entries
(every direction reduces to this by permutations and sign changes).  For
the real cube [-1/2, 1/2]^n (l = 1) and the polydisc
{z in C^n : |z_k| <= 1/sqrt(pi)} (l = 2), both of volume 1:

    A(a, t)  section volume at normalized distance t
             real:    (2/pi) int prod sinc(a_k s) cos(t s) ds
             complex: (1/2) int prod j1c(a_k s) J0(t s) s ds
    D_k(a)   the same integrals with factor k replaced by cos(a_k s),
             resp. J0(a_k s)
    P(a)     boundary measure of the central section
             real:    2 sum sqrt(1 - a_k^2) D_k
             complex: 2 pi sum (1 - a_k^2) D_k
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .oscint import (DEFAULT_SPEC, QuadratureResult, QuadratureSpec,
                     integrate_j1c_product_J0, integrate_sinc_product_cos)

__all__ = [
    "FIELDS",
    "NEGLIGIBLE",
    "ConvergenceError",
    "Direction",
    "SectionProfile",
    "OffsetSection",
    "canonicalize",
    "a_max",
    "a_min",
    "random_direction",
    "scalar_multiplier",
    "section_volume",
    "offset_section",
    "dk",
    "dk_all",
    "perimeter",
    "perimeter_at_a_max",
    "perimeter_n3_closed",
    "perimeter_n4_closed",
    "volume_n3_closed",
    "holder_bound",
    "projection_bound",
    "cor5_bound",
    "section_profile",
]

FIELDS = ("real", "complex")

# Coordinates below this are integrated as exact zeros.  Dropping a weight
# eps moves a section volume by at most eps/2 times the Lipschitz constant of
# the density, while keeping it would need about 1/eps oscillation periods.
NEGLIGIBLE = 1e-9


class ConvergenceError(RuntimeError):
    """A quadrature did not reach its tolerance."""

    def __init__(self, message, result: Optional[QuadratureResult] = None):
        super().__init__(message)
        self.result = result


@dataclass(frozen=True)
class Direction:
    """Canonical unit direction: entries nonnegative, nonincreasing, norm 1."""

    coords: tuple
    field: str = "real"

    def __post_init__(self):
        if self.field not in FIELDS:
            raise ValueError(f"field must be one of {FIELDS}")
        if len(self.coords) < 2:
            raise ValueError("a direction needs at least two coordinates")

    @property
    def n(self) -> int:
        return len(self.coords)

    @property
    def l(self) -> int:
        return scalar_multiplier(self.field)

    def as_array(self) -> np.ndarray:
        return np.array(self.coords, dtype=float)

    def with_field(self, field: str) -> "Direction":
        return Direction(self.coords, field)


def scalar_multiplier(field: str) -> int:
    """1 for the real cube, 2 for the polydisc."""
    if field not in FIELDS:
        raise ValueError(f"field must be one of {FIELDS}")
    return 1 if field == "real" else 2


def canonicalize(raw: Sequence[float], field: str = "real") -> Direction:
    """Absolute values, sorted nonincreasing, scaled to unit norm.

    Complex input is reduced to moduli.

    Examples
    --------
    >>> canonicalize([0, -1]).coords
    (1.0, 0.0)
    """
    arr = np.abs(np.asarray(raw, dtype=complex if np.iscomplexobj(raw) else float))
    arr = arr.astype(float)
    if arr.ndim != 1 or arr.size < 2:
        raise ValueError("a direction needs at least two coordinates")
    if not np.all(np.isfinite(arr)):
        raise ValueError("coordinates must be finite")
    norm = math.sqrt(math.fsum(arr * arr))
    if norm == 0:
        raise ValueError("the zero vector has no direction")
    # already unit up to rounding: keep it, so canonicalization is idempotent
    if abs(norm - 1.0) > 4e-16:
        arr = arr / norm
    arr = np.sort(arr)[::-1]
    # entries equal before scaling stay equal; keep exact zeros
    return Direction(tuple(float(x) for x in arr), field)


def a_max(n: int, field: str = "real") -> Direction:
    """(1, 1, 0, ..., 0) / sqrt 2."""
    r = 1.0 / math.sqrt(2.0)
    return Direction((r, r) + (0.0,) * (n - 2), field)


def a_min(n: int, field: str = "real") -> Direction:
    """(1, 0, ..., 0)."""
    return Direction((1.0,) + (0.0,) * (n - 1), field)


def random_direction(n: int, field: str = "real", rng=None) -> Direction:
    """Uniformly distributed direction (real or complex sphere), canonicalized."""
    rng = np.random.default_rng(rng)
    if field == "real":
        x = rng.standard_normal(n)
    else:
        x = np.abs(rng.standard_normal(n) + 1j * rng.standard_normal(n))
    return canonicalize(x, field)


# -- core integrals --------------------------------------------------------------

def _check(result: QuadratureResult, what: str) -> float:
    if not result.converged:
        raise ConvergenceError(f"{what} did not converge (est. error {result.est_error:.3g})", result)
    return float(result.value)


def _effective_coords(direction: Direction) -> list:
    return [x if x >= NEGLIGIBLE else 0.0 for x in direction.coords]


def _integrate(direction: Direction, c: float = 0.0, skip: Optional[int] = None,
               spec: QuadratureSpec = DEFAULT_SPEC) -> QuadratureResult:
    coords = _effective_coords(direction)
    if direction.field == "real":
        return integrate_sinc_product_cos(coords, c, skip, spec)
    return integrate_j1c_product_J0(coords, c, skip, spec)


def section_volume(a: Direction, t: float = 0.0, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """A(a, t): volume of the section orthogonal to a at normalized distance t.

    For real n <= 3 the result is compared with the exact piecewise
    polynomial value and a mismatch beyond 1e-8 raises ConvergenceError.
    """
    t = float(t)
    if t < 0:
        raise ValueError("t must be nonnegative")
    if t > math.fsum(_effective_coords(a)):
        # the hyperplane misses the body
        return 0.0
    value = _check(_integrate(a, t, None, spec), "section volume")
    if a.field == "real" and a.n <= 3:
        from .oracle import section_volume_oracle
        exact = section_volume_oracle(a, t)
        if abs(exact - value) > 1e-8:
            raise ConvergenceError(f"section volume {value} disagrees with closed form {exact}")
    return value


@dataclass(frozen=True)
class OffsetSection:
    """A section at normalized distance t with its volume."""

    direction: Direction
    t: float
    value: float

    @property
    def bound(self) -> float:
        return cor5_bound(self.t, self.direction.l)


def offset_section(a: Direction, t: float, spec: QuadratureSpec = DEFAULT_SPEC) -> OffsetSection:
    return OffsetSection(a, float(t), section_volume(a, t, spec))


def dk(a: Direction, k: int, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """D_k(a) for 1 <= k <= n; equals A(a) when a_k = 0."""
    if not 1 <= k <= a.n:
        raise ValueError("k out of range")
    c = a.coords[k - 1]
    if c < NEGLIGIBLE:
        return section_volume(a, 0.0, spec)
    rest = [x for j, x in enumerate(_effective_coords(a), start=1) if j != k]
    if c > math.fsum(rest) > 0:
        # a_k lies outside the support of the remaining weighted sum
        return 0.0
    return _check(_integrate(a, 0.0, k, spec), f"D_{k}")


def dk_all(a: Direction, spec: QuadratureSpec = DEFAULT_SPEC) -> list:
    """[D_1, ..., D_n]; equal coordinates share one evaluation.

    D_k is left as NaN when every other coordinate is negligible: the
    defining integral diverges and the perimeter weight of D_k vanishes.
    """
    eff = _effective_coords(a)
    cache = {}
    out = []
    for k, c in enumerate(a.coords, start=1):
        if not any(x > 0 for j, x in enumerate(eff, start=1) if j != k):
            out.append(math.nan)
            continue
        if c not in cache:
            cache[c] = dk(a, k, spec)
        out.append(cache[c])
    return out


def _perimeter_from(a: Direction, d: Sequence[float]) -> float:
    if a.field == "real":
        terms = [math.sqrt(max(0.0, 1.0 - c * c)) * dv for c, dv in zip(a.coords, d) if not math.isnan(dv)]
        return 2.0 * math.fsum(terms)
    terms = [(1.0 - c * c) * dv for c, dv in zip(a.coords, d) if not math.isnan(dv)]
    return 2.0 * math.pi * math.fsum(terms)


def perimeter(a: Direction, spec: QuadratureSpec = DEFAULT_SPEC) -> float:
    """P(a), the boundary measure of the central section; n >= 3."""
    if a.n < 3:
        raise ValueError("perimeter requires n >= 3")
    return _perimeter_from(a, dk_all(a, spec))


def perimeter_at_a_max(n: int, field: str = "real") -> float:
    """2((n-2) sqrt 2 + 1) for the cube, 2 pi (2(n-2) + 1) for the polydisc."""
    if field == "real":
        return 2.0 * ((n - 2) * math.sqrt(2.0) + 1.0)
    return 2.0 * math.pi * (2.0 * (n - 2) + 1.0)


# -- closed forms for small n ---------------------------------------------------------

def _require_real(a: Direction, n: int):
    if a.field != "real" or a.n != n:
        raise ValueError(f"closed form needs a real direction with n = {n}")


def volume_n3_closed(a: Direction) -> float:
    """A(a) for real n = 3: rectangle 1/a1 or hexagon 1/a1 - (a2+a3-a1)^2/(4 a1 a2 a3)."""
    _require_real(a, 3)
    a1, a2, a3 = a.coords
    if a1 >= a2 + a3:
        return 1.0 / a1
    return 1.0 / a1 - (a2 + a3 - a1) ** 2 / (4.0 * a1 * a2 * a3)


def perimeter_n3_closed(a: Direction) -> float:
    """P(a) for real n = 3: rectangle (a1 >= a2 + a3) or hexagon."""
    _require_real(a, 3)
    a1, a2, a3 = a.coords
    s1, s2, s3 = (math.sqrt(1.0 - x * x) for x in (a1, a2, a3))
    if a1 >= a2 + a3:
        half = (s2 + s3) / a1
    else:
        half = (s1 * (a2 + a3 - a1) / (2 * a2 * a3)
                + s2 * (a1 + a3 - a2) / (2 * a1 * a3)
                + s3 * (a1 + a2 - a3) / (2 * a1 * a2))
    return 2.0 * half


def perimeter_n4_closed(a: Direction) -> float:
    """P(a) for real n = 4 by cases a1 < a2+a3-a4, middle, a1 > a2+a3+a4.

    Ties go to the middle branch.  In the first branch the D_4 term is
    1/a1 - ((a2+a3-a1)^2 + a4^2) / (4 a1 a2 a3), the value of the hexagonal
    3-cube section density at a4/2.
    """
    _require_real(a, 4)
    a1, a2, a3, a4 = a.coords
    s1, s2, s3, s4 = (math.sqrt(1.0 - x * x) for x in (a1, a2, a3, a4))
    if a1 < a2 + a3 - a4:
        half = (s1 * (a2 + a3 - a1) / (2 * a2 * a3)
                + s2 * (a1 + a3 - a2) / (2 * a1 * a3)
                + s3 * (a1 + a2 - a3) / (2 * a1 * a2)
                + s4 * (1.0 / a1 - ((a2 + a3 - a1) ** 2 + a4 * a4) / (4 * a1 * a2 * a3)))
    elif a1 > a2 + a3 + a4:
        half = (s2 + s3 + s4) / a1
    else:
        half = (s2 + s3 + s4) / a1
        gap = a2 + a3 + a4 - a1
        if gap != 0.0:
            half -= gap * gap / (8 * a1 * a2 * a3 * a4) * (-a1 * s1 + a2 * s2 + a3 * s3 + a4 * s4)
    return 2.0 * half


# -- bounds -------------------------------------------------------------------------

def holder_bound(a: Direction) -> float:
    """sqrt 2 prod f(a_k^-2)^(a_k^2) with Ball's function f; needs a1 <= 1/sqrt 2."""
    from .ballfn import ball_f
    if a.field != "real":
        raise ValueError("the Hoelder bound is stated for real directions")
    if a.coords[0] > 1.0 / math.sqrt(2.0) + 1e-15:
        raise ValueError("the Hoelder bound requires a1 <= 1/sqrt(2)")
    log_total = 0.5 * math.log(2.0)
    cache = {}
    for c in a.coords:
        if c < NEGLIGIBLE:
            continue
        if c not in cache:
            p = 1.0 / (c * c)
            # f(2) = 1 exactly
            cache[c] = 0.0 if p <= 2.0 else c * c * math.log(ball_f(p))
        log_total += cache[c]
    return math.exp(log_total)


def projection_bound(a: Direction) -> float:
    """1/a1 (real) or 1/a1^2 (complex); valid for a1 > 1/sqrt 2."""
    a1 = a.coords[0]
    if not a1 > 1.0 / math.sqrt(2.0):
        raise ValueError("the projection bound requires a1 > 1/sqrt(2)")
    return 1.0 / a1 if a.field == "real" else 1.0 / (a1 * a1)


def cor5_bound(t: float, l: int) -> float:
    """(2 / (1 + t^2))^(l/2), the bound on offset sections."""
    t = float(t)
    if t < 0:
        raise ValueError("t must be nonnegative")
    if l not in (1, 2):
        raise ValueError("l must be 1 or 2")
    return (2.0 / (1.0 + t * t)) ** (0.5 * l)


# -- bundle -----------------------------------------------------------------------

@dataclass(frozen=True)
class SectionProfile:
    """A(a), D_1..D_n, P(a) and the applicable upper bound for A(a).

    ``holder_bound`` is set for real directions with a1 <= 1/sqrt 2 and
    ``projection_bound`` for a1 > 1/sqrt 2; the other is None.
    """

    direction: Direction
    A: float
    D: tuple
    P: Optional[float]
    holder_bound: Optional[float]
    projection_bound: Optional[float]
    l: int

    @property
    def identity_residual(self) -> float:
        """sum D_k - (n-1) A."""
        d = [x for x in self.D if not math.isnan(x)]
        if len(d) != len(self.D):
            return 0.0
        return math.fsum(d) - (self.direction.n - 1) * self.A


def section_profile(a: Direction, spec: QuadratureSpec = DEFAULT_SPEC,
                    with_holder: bool = True) -> SectionProfile:
    """Compute every section quantity of a direction at once."""
    A = section_volume(a, 0.0, spec)
    D = tuple(A if c < NEGLIGIBLE else v for c, v in zip(a.coords, dk_all(a, spec)))
    P = _perimeter_from(a, D) if a.n >= 3 else None
    hb = pb = None
    if a.coords[0] > 1.0 / math.sqrt(2.0):
        pb = projection_bound(a)
    elif a.field == "real" and with_holder:
        hb = holder_bound(a)
    return SectionProfile(a, A, D, P, hb, pb, a.l)
