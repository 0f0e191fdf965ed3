"""G-Tutte polynomials, G-characteristic polynomials and the multivariate
Z-polynomial of finite lists in finitely generated abelian groups."""

from .abelian_core import (
    ElementList,
    FgGroup,
    SmithForm,
    dual_construction,
    free_group,
    group_from_presentation,
    hom_count,
    is_coloop,
    is_loop,
    list_rank,
    make_list,
    quotient,
    smith_normal_form,
    sublist_rank,
)
from .gtutte_engine import (
    classify_specialization,
    g_characteristic,
    g_tutte,
    g_tutte_dc,
    g_tutte_naive,
    multiplicity,
    multivariate_z,
)
from .polynomials import BiPoly, LaurentMulti, UniPoly
from .target import TargetGroup, parse_group_spec
from .topology import (
    QuasiPolynomial,
    euler_characteristic,
    period,
    point_count_bruteforce,
    point_count_formula,
    poincare_polynomial,
    quasi_polynomial,
)

__version__ = "0.1.0"
