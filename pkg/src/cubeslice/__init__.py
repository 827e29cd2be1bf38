"""Central sections of the unit cube and the polydisc.

Volumes, facet integrals and perimeters of hyperplane sections computed by
oscillatory quadrature, checked against exact densities, plus Ball's
integral function and the cube-versus-ball surface comparison.
"""

from .oscint import (DivergentIntegralError, QuadratureResult, QuadratureSpec,
                     integrate_abs_power, integrate_j1c_product_J0,
                     integrate_semi_infinite, integrate_sinc_product_cos)
from .report import CheckRecord, VerificationReport
from .sections import (ConvergenceError, Direction, OffsetSection, SectionProfile,
                       a_max, a_min, canonicalize, cor5_bound, dk, holder_bound,
                       perimeter, perimeter_n3_closed, perimeter_n4_closed,
                       projection_bound, random_direction, section_profile,
                       section_volume)
from .oracle import (McEstimate, PiecewisePolyDensity, irwin_hall_density,
                     mc_complex_section, perimeter_oracle, piecewise_density,
                     section_volume_oracle)
from .ballfn import (ball_f, ball_f_complex, convexity_witness, crossing_point,
                     find_special_points, kos_asymptotic, np_compare)
from .extremal import (ExtremalReport, SearchConfig, check_lower_bound,
                       interpolation_sweep, lemma10_check, search_max_perimeter)
from .bpcheck import BpRow, ball_radius, bp_complex_value, bp_table, bp_value

__all__ = [
    "DivergentIntegralError",
    "QuadratureResult",
    "QuadratureSpec",
    "integrate_abs_power",
    "integrate_j1c_product_J0",
    "integrate_semi_infinite",
    "integrate_sinc_product_cos",
    "ConvergenceError",
    "Direction",
    "OffsetSection",
    "SectionProfile",
    "a_max",
    "a_min",
    "canonicalize",
    "cor5_bound",
    "dk",
    "holder_bound",
    "perimeter",
    "perimeter_n3_closed",
    "perimeter_n4_closed",
    "projection_bound",
    "random_direction",
    "section_profile",
    "section_volume",
    "McEstimate",
    "PiecewisePolyDensity",
    "irwin_hall_density",
    "mc_complex_section",
    "perimeter_oracle",
    "piecewise_density",
    "section_volume_oracle",
    "ball_f",
    "ball_f_complex",
    "convexity_witness",
    "crossing_point",
    "find_special_points",
    "kos_asymptotic",
    "np_compare",
    "ExtremalReport",
    "SearchConfig",
    "check_lower_bound",
    "interpolation_sweep",
    "lemma10_check",
    "search_max_perimeter",
    "CheckRecord",
    "VerificationReport",
    "BpRow",
    "ball_radius",
    "bp_complex_value",
    "bp_table",
    "bp_value",
    "__version__",
]

__version__ = "0.1.0"
