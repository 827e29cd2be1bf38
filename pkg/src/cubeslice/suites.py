"""Invariant suites run by ``cubeslice verify`` and the test-suite.

Every suite returns a :class:`VerificationReport`.  Random samples are
drawn per (seed, field, n) from ``numpy.random.SeedSequence`` so a suite is
reproducible and independent of which other suites run before it.
"""

from __future__ import annotations

import math
from typing import Iterable, Optional, Sequence

import numpy as np

from . import ballfn, bpcheck, extremal, oracle
from .oscint import DEFAULT_SPEC, QuadratureSpec
from .report import VerificationReport, close, lower, upper
from .sections import (FIELDS, a_max, canonicalize, cor5_bound, holder_bound, perimeter_at_a_max,
                       perimeter_n3_closed, perimeter_n4_closed, random_direction,
                       section_profile, section_volume)

__all__ = [
    "SUITES",
    "SuiteOptions",
    "sample_directions",
    "run_suite",
    "run_all",
]

_FIELD_INDEX = {"real": 0, "complex": 1}


class SuiteOptions:
    """Shared inputs for the suites.

    Parameters
    ----------
    n_values : iterable of int
        Dimensions for the random-direction suites.
    samples : int
        Random directions per dimension and field.
    seed : int
    fields : sequence of str
    spec : QuadratureSpec
    mc_samples : int
        Monte-Carlo sample size for the complex oracle check.
    """

    def __init__(self, n_values: Iterable[int] = range(3, 9), samples: int = 50, seed: int = 0,
                 fields: Sequence[str] = FIELDS, spec: QuadratureSpec = DEFAULT_SPEC,
                 mc_samples: int = 10**6):
        self.n_values = list(n_values)
        self.samples = int(samples)
        self.seed = int(seed)
        self.fields = tuple(fields)
        self.spec = spec
        self.mc_samples = int(mc_samples)
        self._profiles = {}

    def profile(self, d):
        key = (d.field, d.coords)
        if key not in self._profiles:
            self._profiles[key] = section_profile(d, self.spec, with_holder=False)
        return self._profiles[key]


def sample_directions(n: int, field: str, samples: int, seed: int) -> list:
    """Reproducible random canonical directions for one (n, field)."""
    rng = np.random.default_rng(np.random.SeedSequence([seed, n, _FIELD_INDEX[field]]))
    return [random_direction(n, field, rng) for _ in range(samples)]


def _each(opts: SuiteOptions, min_n: int = 3):
    for field in opts.fields:
        for n in opts.n_values:
            if n < min_n:
                continue
            for i, d in enumerate(sample_directions(n, field, opts.samples, opts.seed)):
                yield field, n, i, d


def _tag(d, i):
    return {"field": d.field, "n": d.n, "sample": i, "direction": list(d.coords)}


# -- suites --------------------------------------------------------------------

def suite_prop3(opts: SuiteOptions) -> VerificationReport:
    """sum_k D_k = (n-1) A."""
    rep = VerificationReport("prop3")
    for field, n, i, d in _each(opts):
        pr = opts.profile(d)
        rep.add(close("sum D_k - (n-1) A", pr.identity_residual, 0.0, 1e-7, **_tag(d, i)))
    return rep


def suite_prop4(opts: SuiteOptions) -> VerificationReport:
    """D_k <= A and 1 <= A <= sqrt2 (real) or 2 (complex)."""
    rep = VerificationReport("prop4")
    ordered = total = 0
    for field, n, i, d in _each(opts):
        pr = opts.profile(d)
        D = [x for x in pr.D if not math.isnan(x)]
        rep.add(upper("max D_k <= A", max(D), pr.A, 1e-7, **_tag(d, i)))
        rep.add(lower("A >= 1", pr.A, 1.0, 1e-7, **_tag(d, i)))
        rep.add(upper("A <= sqrt2^l", pr.A, math.sqrt(2.0) ** d.l, 1e-7, **_tag(d, i)))
        # observation only: does D_k grow as a_k shrinks?
        total += 1
        ordered += all(x <= y + 1e-9 for x, y in zip(D, D[1:]))
    rep.info["fraction_with_D_nondecreasing_in_k"] = ordered / total if total else float("nan")
    return rep


def suite_cor5(opts: SuiteOptions) -> VerificationReport:
    """A(a, t) <= (2/(1+t^2))^(l/2) for t = 0.1, 0.2, ..., 2."""
    rep = VerificationReport("cor5")
    ts = [round(0.1 * k, 10) for k in range(1, 21)]
    for field, n, i, d in _each(opts, min_n=2):
        for t in ts:
            rep.add(upper("A(a,t) <= (2/(1+t^2))^(l/2)", section_volume(d, t, opts.spec),
                          cor5_bound(t, d.l), 1e-7, t=t, **_tag(d, i)))
    return rep


def suite_thm1(opts: SuiteOptions) -> VerificationReport:
    """P(a) <= P(a_max), the closed forms for n = 3, 4, and the crude chain bounds."""
    rep = VerificationReport("thm1")
    for field in opts.fields:
        for n in opts.n_values:
            pr = opts.profile(a_max(n, field))
            rep.add(close("P(a_max) closed value", pr.P, perimeter_at_a_max(n, field), 1e-6,
                          field=field, n=n))
    for field, n, i, d in _each(opts):
        pr = opts.profile(d)
        rep.add(upper("P(a) <= P(a_max)", pr.P, perimeter_at_a_max(n, field), 1e-7, **_tag(d, i)))
        if field != "real":
            continue
        if n == 3:
            rep.add(close("P = closed form (n=3)", pr.P, perimeter_n3_closed(d), 1e-7, **_tag(d, i)))
        if n == 4:
            rep.add(close("P = closed form (n=4)", pr.P, perimeter_n4_closed(d), 1e-7, **_tag(d, i)))
        a1 = d.coords[0]
        if a1 <= 1.0 / math.sqrt(2.0):
            bound = (n - 1) * math.sqrt(1.0 - (1.0 - a1 * a1) / (n - 1)) * pr.A
            rep.add(upper("P/2 <= concavity bound", 0.5 * pr.P, bound, 1e-7, **_tag(d, i)))
        if extremal.A1_LOW < a1 < extremal.A1_HIGH:
            excess = 0.5 * pr.P - ((n - 2) * math.sqrt(2.0) + 1.0)
            rep.add(upper("P/2 excess <= 2(3/4 sqrt2 - 1)", excess, extremal.GAP_LIMIT, 1e-6, **_tag(d, i)))
    return rep


def suite_prop11(opts: SuiteOptions) -> VerificationReport:
    """P(a) >= 2 pi^(l-1) (n-2); the stronger a_min value is only counted."""
    rep = VerificationReport("prop11")
    above = total = 0
    for field, n, i, d in _each(opts):
        pr = opts.profile(d)
        scale = 2.0 * math.pi ** (d.l - 1)
        rep.add(lower("P >= 2 pi^(l-1) (n-2)", pr.P, scale * (n - 2), 1e-6, **_tag(d, i)))
        total += 1
        above += pr.P >= scale * (n - 1) - 1e-9
    rep.info["fraction_above_a_min_value"] = above / total if total else float("nan")
    return rep


def suite_oracle_equiv(opts: SuiteOptions) -> VerificationReport:
    """Quadrature versus exact densities (real) and Monte Carlo (complex, n <= 5)."""
    rep = VerificationReport("oracle-equiv")
    for field, n, i, d in _each(opts):
        if field == "real":
            pr = opts.profile(d)
            rep.add(close("A = Irwin-Hall density", pr.A, oracle.section_volume_oracle(d, 0.0), 1e-8, **_tag(d, i)))
            rep.add(close("A(a, 0.3) = Irwin-Hall density", section_volume(d, 0.3, opts.spec),
                          oracle.section_volume_oracle(d, 0.3), 1e-8, **_tag(d, i)))
            rep.add(close("P = exact perimeter", pr.P, oracle.perimeter_oracle(d), 1e-7, **_tag(d, i)))
        elif n <= 5 and i < 10:
            pr = opts.profile(d)
            mc = oracle.mc_complex_section(d, samples=opts.mc_samples, seed=opts.seed + 1000 * n + i)
            rep.add(close("A = Monte Carlo (3 sigma)", pr.A, mc.value, 3.0 * mc.std_error, **_tag(d, i)))
    return rep


def suite_ballfn(opts: SuiteOptions) -> VerificationReport:
    """Ball's function, its complex analogue, the explicit bound pipelines and the witness."""
    rep = VerificationReport("ballfn")
    s3p = ballfn.SQRT_3_OVER_PI
    rep.add(close("f(2) = 1", ballfn.ball_f(2.0), 1.0, 1e-9))
    rep.add(upper("f(9/4) <= 0.977", ballfn.ball_f(2.25), 0.977))
    rep.add(upper("f(sqrt2 + 1/2) <= 1.0199", ballfn.ball_f(ballfn.P_LOW), 1.0199))
    for p in np.linspace(2.25, 50.0, 80):
        rep.add(upper("f(p) <= sqrt(3/pi)", ballfn.ball_f(p), s3p, 1e-9, p=float(p)))
    for p in np.linspace(2.0, 50.0, 49):
        rep.add(upper("f(p) <= 1", ballfn.ball_f(p), 1.0, 1e-9, p=float(p)))
    for p in np.linspace(1.21, 1.99, 14):
        rep.add(lower("f(p) > 1 below 2", ballfn.ball_f(p), 1.0, 0.0, p=float(p)))
    grid = np.arange(ballfn.P_LOW, 2.25 + 1e-12, 0.01)
    vals = np.array([ballfn.ball_f(p) for p in grid])
    rep.add(upper("f decreasing on [sqrt2+1/2, 9/4]", np.diff(vals).max(), 0.0, 0.0))
    rep.add(lower("f convex on [sqrt2+1/2, 9/4]", np.diff(vals, 2).min(), 0.0, 1e-8))
    for p in grid:
        rep.add(lower("convexity witness >= 1/5", ballfn.convexity_witness(p), 0.2, 0.0, p=float(p)))
    sp = ballfn.find_special_points()
    rep.info["special_points"] = {"p1": sp.p1, "p2": sp.p2, "p0": sp.p0}
    for name, value, lo, hi in (("p1", sp.p1, 2.165, 2.166), ("p2", sp.p2, 3.36, 3.37), ("p0", sp.p0, 4.46, 4.47)):
        rep.add(lower(f"{name} > {lo}", value, lo))
        rep.add(upper(f"{name} < {hi}", value, hi))
    for p in (20.0, 40.0, 80.0):
        rep.add(upper("|f - KOS| <= 1/p^3", abs(ballfn.ball_f(p) - ballfn.kos_asymptotic(p)), p ** -3, 0.0, p=p))
    rep.add(upper("|f(40) - KOS(40)| <= 5e-5", abs(ballfn.ball_f(40.0) - ballfn.kos_asymptotic(40.0)), 5e-5))
    b94 = ballfn.appendix_bound_9_4()
    rep.add(upper("I_0 <= 0.91340", b94.pieces["I0"], 0.91340))
    rep.add(upper("I_1 <= 0.03414", b94.pieces["I1"], 0.03414))
    rep.add(upper("9/4 pipeline <= 0.977", b94.total, 0.977))
    rep.add(lower("9/4 pipeline >= f(9/4)", b94.total, ballfn.ball_f(2.25)))
    bl = ballfn.appendix_bound_sqrt2_half()
    rep.add(upper("I_01 <= 0.76509", bl.pieces["I01"], 0.76509))
    rep.add(upper("zeta tail <= 0.02567", bl.pieces["tail"], 0.02567))
    rep.add(upper("sqrt2+1/2 pipeline <= 1.0199", bl.total, 1.0199))
    rep.add(lower("sqrt2+1/2 pipeline >= f(sqrt2+1/2)", bl.total, ballfn.ball_f(ballfn.P_LOW)))
    rep.add(close("f~(2) = 1", ballfn.ball_f_complex(2.0), 1.0, 1e-8))
    for p in (2.5, 3.0, 4.0, 8.0, 20.0, 50.0):
        rep.add(upper("f~(p) <= 1", ballfn.ball_f_complex(p), 1.0, 1e-9, p=p))
    rep.add(lower("f~(50) > 0.9", ballfn.ball_f_complex(50.0), 0.9))
    for n in (3, 5, 10):
        d = canonicalize([1.0] * n)
        rep.add(lower("Hoelder bound >= A", holder_bound(d), section_volume(d), 0.0, n=n))
    return rep


def suite_np(opts: SuiteOptions) -> VerificationReport:
    """|sinc| <= exp(-x^2/6) on (0, pi) and the single crossing of H - G."""
    rep = VerificationReport("np")
    x = np.linspace(1e-6, math.pi, 200001)[:-1]
    g = np.abs(np.sin(x) / x)
    h = np.exp(-x * x / 6.0)
    # near 0 both equal 1 - x^2/6 to within x^4/180: allow a few ulps
    rep.add(upper("max (g - h) on (0, pi)", float(np.max(g - h)), 0.0, 4.5e-16))
    ys = np.logspace(-3, 0, 10000, endpoint=False)
    cmp = ballfn.np_compare_grid(ys)
    G = np.array([c.G for c in cmp])
    H = np.array([c.H for c in cmp])
    diff = H - G
    sign = np.sign(diff)
    sign = sign[sign != 0]
    changes = int(np.count_nonzero(sign[1:] != sign[:-1]))
    rep.add(close("sign changes of H - G", changes, 1, 0))
    y0 = ballfn.np_crossing()
    rep.info["y0"] = y0
    y1 = float(np.max(np.abs(np.sinc(np.linspace(1.0, 2.0, 100001)))))
    rep.info["y1"] = y1
    mask = ys > y1
    rep.add(lower("H >= G on (y1, 1)", float(np.min(diff[mask])), 0.0))
    rep.add(upper("G nonincreasing", float(np.max(np.diff(G))), 0.0))
    rep.add(upper("H nonincreasing", float(np.max(np.diff(H))), 0.0))
    table = {ballfn.P_LOW: (1.8205, 0.5323), 2.0: (1.7863, 0.5469), 2.25: (1.6965, 0.5848)}
    for p, (xp, yp) in table.items():
        cx, cy = ballfn.crossing_point(p)
        rep.add(close("x_p", cx, xp, 5e-4, p=p))
        rep.add(close("y_p", cy, yp, 5e-4, p=p))
    return rep


def suite_lemma10(opts: SuiteOptions, points: int = 20) -> VerificationReport:
    """Two-factor Hoelder integral <= 0.985 sqrt2 on a grid over the box."""
    rep = VerificationReport("lemma10")
    (l1, h1), (l2, h2) = extremal.PAIR_BOX
    for a1 in np.linspace(l1, h1, points):
        for a2 in np.linspace(l2, h2, points):
            rep.add(upper("integral <= 0.985 sqrt2", extremal.lemma10_check(a1, a2), extremal.PAIR_BOUND,
                          0.0, a1=float(a1), a2=float(a2)))
    return rep


def suite_lemmas89(opts: SuiteOptions) -> VerificationReport:
    """Interpolation bounds for every n >= 4 in the requested range (at least 4..8)."""
    rep = VerificationReport("lemmas89")
    for n in sorted(set(range(4, 9)) | {n for n in opts.n_values if n >= 4}):
        rep.extend(extremal.interpolation_sweep(n))
    return rep


def suite_bp(opts: SuiteOptions) -> VerificationReport:
    """Cube-versus-ball surface comparison."""
    rep = VerificationReport("bp")
    rows = bpcheck.bp_table(3, 200)
    rep.add(upper("BP decreasing", max(b.bp - a.bp for a, b in zip(rows, rows[1:])), 0.0, 0.0))
    rep.add(lower("BP(13) > 1", bpcheck.bp_value(13), 1.0))
    rep.add(upper("BP(14) < 1", bpcheck.bp_value(14), 1.0))
    rep.add(close("root", bpcheck.bp_root(), 13.70, 0.01))
    rep.add(close("first complex counterexample", bpcheck.first_counterexample("complex"), 11, 0))
    return rep


SUITES = {
    "prop3": suite_prop3,
    "prop4": suite_prop4,
    "cor5": suite_cor5,
    "thm1": suite_thm1,
    "ballfn": suite_ballfn,
    "np": suite_np,
    "lemma10": suite_lemma10,
    "lemmas89": suite_lemmas89,
    "prop11": suite_prop11,
    "oracle-equiv": suite_oracle_equiv,
    "bp": suite_bp,
}


def run_suite(name: str, opts: Optional[SuiteOptions] = None) -> list:
    """Run one suite (or ``"all"``) and return a list of reports."""
    opts = opts or SuiteOptions()
    if name == "all":
        return run_all(opts)
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES) + ['all']}")
    return [SUITES[name](opts)]


def run_all(opts: Optional[SuiteOptions] = None) -> list:
    opts = opts or SuiteOptions()
    return [fn(opts) for fn in SUITES.values()]
