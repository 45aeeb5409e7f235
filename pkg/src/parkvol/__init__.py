"""Generalized parking functions, descent numbers and volumes of ribbon chain polytopes.

Exact arithmetic throughout: Python ints for counts, :class:`fractions.Fraction`
for volumes.
"""

from .combinatorics import (
    CapExceeded,
    a_of_composition,
    beta,
    beta_bruteforce,
    comp_of_subset,
    descent_set,
    euler_number,
    kappa_enumerate,
    multinomial,
    subset_of_avector,
)
from .parking import (
    content,
    count_a_parking,
    enumerate_a_parking,
    eval_at_minus_one,
    inversion_enumerator_via_parking,
    is_a_parking,
    sum_enumerator,
)
from .polynomials import MultiPoly, UniPoly
from .polytope import (
    RibbonPoset,
    ZPolytopeSpec,
    defining_inequalities,
    j_partial,
    linear_extensions_ribbon,
    pitman_stanley_volume,
    sum_enumerator_specialization,
    volume_formula,
    volume_integration_oracle,
    volume_parking_sum,
    volume_polynomial,
)
from .strips import (
    Direction,
    FilledStrip,
    FixedPoint,
    assigned_direction,
    fixed_points,
    moveable,
    parking_of_strip,
    psi,
    s_statistic,
    strip_of_parking,
    verify_involution_theorem,
)
from .trees import LabeledTree, enumerate_trees, inversion_enumerator_via_trees, inversions

__version__ = "0.1.0"
