"""Congruent numbers built from right triangles and Pell equations.

Every number comes with a rational right triangle that checks exactly.
"""

from .arith import (
    Factorization,
    difference_of_squares,
    factorize,
    is_perfect_square,
    is_sum_of_two_squares,
    squarefree_decomposition,
    squarefree_part,
)
from .certificate import CongruentCertificate, Construction, certify, verify_certificate
from .errors import (
    CongruentError,
    InvalidParameters,
    NotAdmissible,
    NotQuadraticIrrational,
    NotRepresentable,
    ScaleNotSquare,
    Unsolvable,
    WrongResidue,
)
from .families import corollary4, remark5_variant, sweep_families, theorem6
from .pell import (
    CFExpansion,
    PellSolution,
    cf_expand,
    fundamental,
    negative_pell_necessary,
    solutions,
    theorem8_admissible,
)
from .pipeline import PellCongruentResult, closing_example, corollary9_build, theorem8, theorem10
from .triples import (
    PythTriple,
    TriplePair,
    area_congruent,
    corollary2_numbers,
    from_parameters,
    lemma1_transforms,
)

__version__ = "0.1.0"


def clear_caches():
    """Drop memoized factorizations and continued fractions (for timing)."""
    from . import arith, pell

    arith.clear_factor_cache()
    pell.cf_expand.cache_clear()
    pell.fundamental.cache_clear()
