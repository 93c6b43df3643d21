"""Exact computer algebra for symmetric functions in noncommuting
variables: the m/p/e/h bases over set partitions, the Schur-type bases and
their product and refinement identities, Rosas-Sagan functions, the
lattice-path swap, and the compositions-indexed algebra with its embedding
and forgetful maps. All arithmetic is exact over the rationals.
"""

from .combinat import (
    SkewShape,
    SemistandardTableau,
    YoungTableau,
    concat,
    delta_pi,
    kostka,
    near_concat,
    partitions,
    ribbon_shape,
    set_partitions,
    skew,
    slash,
)
from .ncpoly import CPoly, NCPoly
from .ncsym import (
    NCSymExpr,
    coproduct,
    delta_action,
    from_m,
    naive_expand,
    omega,
    oracle_expand,
    product,
    rho,
    to_m,
)
from .nsym import NSymExpr, chi, iota
from .schur import (
    h_to_schur,
    rosas_sagan,
    rs_lr_expand,
    schur_basis_convert,
    source_skew_schur,
    skew_schur_nc,
    specht_rank,
    specht_vector,
    standard_schur,
    tabloid_schur,
    transposed_schur,
)
from .sym import SymExpr, jacobi_trudi, littlewood_richardson, skew_schur

__all__ = [
    "CPoly",
    "NCPoly",
    "NCSymExpr",
    "NSymExpr",
    "SemistandardTableau",
    "SkewShape",
    "SymExpr",
    "YoungTableau",
    "chi",
    "concat",
    "coproduct",
    "delta_action",
    "delta_pi",
    "from_m",
    "h_to_schur",
    "iota",
    "jacobi_trudi",
    "kostka",
    "littlewood_richardson",
    "naive_expand",
    "near_concat",
    "omega",
    "oracle_expand",
    "partitions",
    "product",
    "rho",
    "ribbon_shape",
    "rosas_sagan",
    "rs_lr_expand",
    "schur_basis_convert",
    "set_partitions",
    "skew",
    "skew_schur",
    "skew_schur_nc",
    "slash",
    "source_skew_schur",
    "specht_rank",
    "specht_vector",
    "standard_schur",
    "tabloid_schur",
    "to_m",
    "transposed_schur",
]
