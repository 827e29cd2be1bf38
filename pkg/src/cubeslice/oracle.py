"""Independent ground truth for section volumes.

Real case: the density of S = sum a_k U_k, U_k independent uniform on
[-1/2, 1/2], is the generalized Irwin-Hall density

    f(x) = 1 / ((m-1)! prod a_k) * sum_eps (-1)^|eps| (x + sum a_k / 2 - eps.a)_+^(m-1)

over the m positive weights.  Every float is an exact dyadic rational, so
the alternating sum is evaluated in integer arithmetic and rounded once at
the end.  The central section of the cube orthogonal to a at distance t/2
has volume f(t/2).

Complex case: a seeded Monte-Carlo estimate of the planar density of
sum a_k Z_k at the origin, Z_k uniform on the disc of radius 1/sqrt(pi).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

__all__ = [
    "MAX_TERMS",
    "PiecewisePolyDensity",
    "McEstimate",
    "irwin_hall_density",
    "irwin_hall_exact",
    "piecewise_density",
    "section_volume_oracle",
    "dk_oracle",
    "perimeter_oracle",
    "mc_complex_section",
]

MAX_TERMS = 25


def _positive_weights(weights):
    a = [abs(float(w)) for w in weights]
    if any(math.isnan(w) or math.isinf(w) for w in a):
        raise ValueError("weights must be finite")
    a = [w for w in a if w > 0]
    if not a:
        raise ValueError("at least one positive weight is required")
    if len(a) > MAX_TERMS:
        raise ValueError(f"at most {MAX_TERMS} positive weights are supported")
    return a


def _common_scale(values):
    """Integers N_i and exponent E with values[i] = N_i / 2**E exactly."""
    fr = [Fraction(v) for v in values]
    den = max(f.denominator for f in fr)
    exp = den.bit_length() - 1
    return [int(f * den) for f in fr], exp


def _signed_subset_sums(ints):
    """Map subset sum -> sum of (-1)^|subset| over subsets with that sum."""
    table = {0: 1}
    for v in ints:
        new = dict(table)
        for s, c in table.items():
            new[s + v] = new.get(s + v, 0) - c
        table = {s: c for s, c in new.items() if c != 0}
    return table


def irwin_hall_exact(weights: Sequence[float], x: float) -> Fraction:
    """Exact density of sum a_k U_k at x, as a Fraction.

    At a breakpoint of the single-weight case the midpoint value is used,
    which matches Fourier inversion.
    """
    a = _positive_weights(weights)
    m = len(a)
    ints, exp = _common_scale(a + [float(x)])
    A, X = ints[:-1], ints[-1]
    total_a = sum(A)
    acc = 0
    for v, c in _signed_subset_sums(A).items():
        y = 2 * X + total_a - 2 * v  # (x + sum a/2 - v) scaled by 2^(E+1)
        if y > 0:
            acc += c * y ** (m - 1)
        elif y == 0 and m == 1:
            acc += Fraction(c, 2)
    den = 2 ** exp
    # f = acc / (2 den)^(m-1) / ((m-1)! prod(A / den))
    return Fraction(acc) * Fraction(den ** m, (2 * den) ** (m - 1) * math.factorial(m - 1) * math.prod(A))


def irwin_hall_density(weights: Sequence[float], x: float) -> float:
    """Density of sum a_k U_k at x; zero weights are dropped.

    The weights need not be normalized.  Rejects more than ``MAX_TERMS``
    positive weights.

    Examples
    --------
    >>> irwin_hall_density([1.0], 0.0)
    1.0
    """
    return float(irwin_hall_exact(weights, x))


@dataclass(frozen=True)
class PiecewisePolyDensity:
    """Exact piecewise-polynomial density of sum a_k U_k.

    Attributes
    ----------
    weights : tuple of float
        The positive generating weights.
    breakpoints : tuple of Fraction
        Sorted knots; the density vanishes outside [first, last].
    coefficients : tuple of tuple of Fraction
        Ascending power coefficients of the polynomial on each interval
        [breakpoints[i], breakpoints[i+1]].
    """

    weights: tuple
    breakpoints: tuple
    coefficients: tuple

    @property
    def support(self):
        return float(self.breakpoints[0]), float(self.breakpoints[-1])

    def exact(self, x) -> Fraction:
        xf = Fraction(float(x)) if not isinstance(x, Fraction) else x
        b = self.breakpoints
        if xf < b[0] or xf > b[-1]:
            return Fraction(0)
        i = 0
        while i + 2 < len(b) and xf >= b[i + 1]:
            i += 1
        out = Fraction(0)
        for c in reversed(self.coefficients[i]):
            out = out * xf + c
        return out

    def __call__(self, x) -> float:
        return float(self.exact(x))

    def integral(self) -> Fraction:
        """Exact integral over the support."""
        total = Fraction(0)
        b = self.breakpoints
        for i, coefs in enumerate(self.coefficients):
            lo, hi = b[i], b[i + 1]
            for j, c in enumerate(coefs):
                total += c * (hi ** (j + 1) - lo ** (j + 1)) / (j + 1)
        return total


def piecewise_density(weights: Sequence[float]) -> PiecewisePolyDensity:
    """Build the exact piecewise-polynomial form of the Irwin-Hall density."""
    a = _positive_weights(weights)
    m = len(a)
    fa = [Fraction(w) for w in a]
    half = sum(fa) / 2
    table = {}
    for v, c in _signed_subset_sums([Fraction(w) for w in fa]).items():
        table[v - half] = c
    knots = sorted(table)
    norm = Fraction(1, math.factorial(m - 1)) / math.prod(fa)
    coefs = []
    running = [Fraction(0)] * m
    for knot in knots[:-1]:
        c = table[knot]
        # add c (x - knot)^(m-1)
        for j in range(m):
            running[j] += c * math.comb(m - 1, j) * (-knot) ** (m - 1 - j)
        coefs.append(tuple(r * norm for r in running))
    return PiecewisePolyDensity(tuple(a), tuple(knots), tuple(coefs))


def section_volume_oracle(direction, t: float = 0.0) -> float:
    """Volume of the cube section orthogonal to a real direction at offset t/2."""
    coords = _coords(direction, "real")
    return irwin_hall_density(coords, 0.5 * float(t))


def dk_oracle(direction, k: int) -> float:
    """D_k as the density of sum_{j != k} a_j U_j at a_k / 2."""
    coords = _coords(direction, "real")
    rest = [c for i, c in enumerate(coords) if i != k - 1]
    if not any(r > 0 for r in rest):
        raise ValueError("D_k is undefined when all other coordinates vanish")
    return irwin_hall_density(rest, 0.5 * coords[k - 1])


def perimeter_oracle(direction) -> float:
    """Perimeter 2 sum sqrt(1 - a_k^2) D_k with every D_k from the exact density."""
    coords = _coords(direction, "real")
    n = len(coords)
    if n < 3:
        raise ValueError("perimeter requires n >= 3")
    if coords[0] == 1.0:
        return 2.0 * (n - 1)
    total = math.fsum(math.sqrt(1.0 - c * c) * dk_oracle(coords, k + 1)
                      for k, c in enumerate(coords))
    return 2.0 * total


def _coords(direction, field):
    if hasattr(direction, "coords"):
        if getattr(direction, "field", field) != field:
            raise ValueError(f"expected a {field} direction")
        return [float(c) for c in direction.coords]
    return [abs(float(c)) for c in direction]


# -- Monte Carlo for the polydisc ---------------------------------------------

SHARDS = 8
_CHUNK = 1_000_000


@dataclass(frozen=True)
class McEstimate:
    """Monte-Carlo estimate of a planar density at the origin."""

    value: float
    std_error: float
    samples: int
    seed: int


def mc_complex_section(direction, samples: int = 10**7, eps: float = 0.02,
                       seed: int = 0) -> McEstimate:
    """Estimate the central polydisc section volume by sampling.

    Draws Z_k uniform on the disc of radius 1/sqrt(pi) and counts how often
    |sum a_k Z_k| < eps.  Samples are split over ``SHARDS`` Philox streams
    spawned from ``SeedSequence(seed)``, each consumed in fixed chunks, so
    a given (samples, seed) pair reproduces bit for bit.
    """
    if samples < 10**5:
        raise ValueError("samples must be at least 1e5")
    if not 0 < eps < 0.1:
        raise ValueError("eps must lie in (0, 0.1)")
    a = np.array(_coords(direction, "complex"), dtype=float)
    a = a[a > 0]
    radius = 1.0 / math.sqrt(math.pi)
    children = np.random.SeedSequence(seed).spawn(SHARDS)
    per_shard = [samples // SHARDS + (1 if i < samples % SHARDS else 0) for i in range(SHARDS)]
    hits = 0
    eps2 = eps * eps
    for child, count in zip(children, per_shard):
        gen = np.random.Generator(np.random.Philox(child))
        left = count
        while left > 0:
            size = min(_CHUNK, left)
            r = radius * np.sqrt(gen.random((size, a.size)))
            theta = 2.0 * math.pi * gen.random((size, a.size))
            wx = (r * np.cos(theta)) @ a
            wy = (r * np.sin(theta)) @ a
            hits += int(np.count_nonzero(wx * wx + wy * wy < eps2))
            left -= size
    area = math.pi * eps2
    p = hits / samples
    value = p / area
    se = math.sqrt(max(p * (1.0 - p), 1.0 / samples) / samples) / area
    return McEstimate(value, se, samples, seed)
