"""Cube versus ball: the surface-area comparison behind the counterexample.

Let L be the Euclidean ball whose central sections all have boundary
measure equal to the maximal section perimeter of the cube.  The cube has
larger total surface area than L exactly when BP(n) < 1.

Real case (cube [-1/2, 1/2]^n, surface area 2n):

    S_{n-2}(r) = 2((n-2) sqrt 2 + 1),   BP(n) = S_{n-1}(r) / (2n),

where S_k(r) = 2 pi^((k+1)/2) r^k / Gamma((k+1)/2) is the k-dimensional
measure of the sphere of radius r in R^(k+1).

Complex case (polydisc of volume 1): the same recipe with dimensions
doubled, matching the perimeter convention P_{2(n-2)}(a_min) = 2 pi (n-1)
under which the polydisc surface measure is 2 pi n:

    S_{2(n-2)}(r) = 2 pi (2(n-2) + 1),  BP_C(n) = S_{2(n-1)}(r) / (2 pi n).

All Gamma factors are evaluated in log space so n up to 200 is safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.optimize import brentq

__all__ = [
    "BpRow",
    "sphere_measure",
    "log_sphere_measure",
    "ball_radius",
    "bp_value",
    "bp_complex_radius",
    "bp_complex_value",
    "bp_table",
    "bp_root",
    "first_counterexample",
]

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class BpRow:
    """One dimension of the comparison table."""

    n: int
    radius: float
    bp: float
    field: str = "real"

    @property
    def counterexample(self) -> bool:
        return self.bp < 1.0


def log_sphere_measure(k: float, r: float) -> float:
    """log of the k-dimensional measure of the radius-r sphere in R^(k+1)."""
    return math.log(2.0) + 0.5 * (k + 1) * math.log(math.pi) + k * math.log(r) - math.lgamma(0.5 * (k + 1))


def sphere_measure(k: float, r: float) -> float:
    return math.exp(log_sphere_measure(k, r))


def _radius_for(k: float, measure: float) -> float:
    # invert S_k(r) = measure
    log_r = (math.log(measure) - math.log(2.0) - 0.5 * (k + 1) * math.log(math.pi)
             + math.lgamma(0.5 * (k + 1))) / k
    return math.exp(log_r)


def ball_radius(n: float) -> float:
    """r with S_{n-2}(r) = 2((n-2) sqrt 2 + 1).

    Equals [((n-2) sqrt 2 + 1) Gamma((n-1)/2)]^(1/(n-2)) / pi^((n-1)/(2(n-2))).
    """
    if n <= 2:
        raise ValueError("n must exceed 2")
    return _radius_for(n - 2, 2.0 * ((n - 2) * SQRT2 + 1.0))


def bp_value(n: float) -> float:
    """BP(n) = [((n-2) sqrt2 + 1) Gamma((n-1)/2)]^((n-1)/(n-2)) / (n Gamma(n/2) pi^(1/(2(n-2)))).

    Accepts real n > 2 so that the crossover can be located by root finding.
    """
    if n <= 2:
        raise ValueError("n must exceed 2")
    c = (n - 2) * SQRT2 + 1.0
    log_bp = ((n - 1) / (n - 2) * (math.log(c) + math.lgamma(0.5 * (n - 1)))
              - math.log(n) - math.lgamma(0.5 * n) - math.log(math.pi) / (2.0 * (n - 2)))
    return math.exp(log_bp)


def bp_complex_radius(n: float) -> float:
    """r with S_{2(n-2)}(r) = 2 pi (2(n-2) + 1)."""
    if n <= 2:
        raise ValueError("n must exceed 2")
    return _radius_for(2 * (n - 2), 2.0 * math.pi * (2.0 * (n - 2) + 1.0))


def bp_complex_value(n: float) -> float:
    """BP_C(n) = S_{2(n-1)}(r) / (2 pi n) with r from ``bp_complex_radius``."""
    r = bp_complex_radius(n)
    return math.exp(log_sphere_measure(2 * (n - 1), r) - math.log(2.0 * math.pi * n))


def _value(field):
    if field == "real":
        return bp_value, ball_radius
    if field == "complex":
        return bp_complex_value, bp_complex_radius
    raise ValueError("field must be 'real' or 'complex'")


def bp_table(n_min: int = 3, n_max: int = 20, field: str = "real") -> list:
    """Rows n = n_min..n_max of (radius, BP) for the chosen field."""
    if not 3 <= n_min <= n_max <= 200:
        raise ValueError("need 3 <= n_min <= n_max <= 200")
    value, radius = _value(field)
    return [BpRow(n, radius(n), value(n), field) for n in range(n_min, n_max + 1)]


def bp_root(field: str = "real", lo: float = 3.0, hi: float = 200.0) -> float:
    """x0 with BP(x0) = 1 (real argument)."""
    value, _ = _value(field)
    return brentq(lambda x: value(x) - 1.0, lo, hi, xtol=1e-12)


def first_counterexample(field: str = "real", n_max: int = 200):
    """Smallest integer n >= 3 with BP(n) < 1, or None."""
    for row in bp_table(3, n_max, field):
        if row.counterexample:
            return row.n
    return None
