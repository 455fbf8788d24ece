"""Milnor invariants and lower central series computations for links."""

from .basing import (
    BasingReport,
    free_quotient_depth,
    max_basing_rel_unlink,
    mu_n_equal,
    relative_max_basing,
)
from .config import VERSION as __version__
from .config import AtLeast
from .diagram import (
    Crossing,
    LinkDiagram,
    braid_closure,
    linking_matrix,
    parse_braid,
    parse_pd,
    rebase,
    writhe,
)
from .errors import (
    ComponentMismatch,
    DegreeOverflow,
    HypothesisUnmet,
    InvalidDiagram,
    LengthOverflow,
    MilnorKitError,
    NonConvergence,
    NotAUnit,
    NotInKernel,
    NotSurjective,
    ParseError,
)
from .gseries import (
    FiniteQuotientMap,
    SchreierData,
    gamma_n_member,
    rewrite_in_subgroup,
    schreier_basis,
)
from .hall import HallBasis, NilpotentCoordinates, collect, hall_basis, in_lcs
from .magnus import MagnusSeries, expand, lcs_degree
from .milnor import MilnorTable, ReducedLongitudes, delta, mu, mu_bar, reduce_longitudes, table
from .wirtinger import GroupPresentation, longitude, presentation
from .words import FreeWord, commutator, parse_word

__all__ = [
    "__version__",
    "AtLeast",
    "BasingReport",
    "braid_closure",
    "collect",
    "commutator",
    "ComponentMismatch",
    "Crossing",
    "DegreeOverflow",
    "delta",
    "expand",
    "FiniteQuotientMap",
    "free_quotient_depth",
    "FreeWord",
    "gamma_n_member",
    "GroupPresentation",
    "hall_basis",
    "HallBasis",
    "HypothesisUnmet",
    "in_lcs",
    "InvalidDiagram",
    "lcs_degree",
    "LengthOverflow",
    "LinkDiagram",
    "linking_matrix",
    "longitude",
    "MagnusSeries",
    "max_basing_rel_unlink",
    "MilnorKitError",
    "MilnorTable",
    "mu",
    "mu_bar",
    "mu_n_equal",
    "NilpotentCoordinates",
    "NonConvergence",
    "NotAUnit",
    "NotInKernel",
    "NotSurjective",
    "parse_braid",
    "parse_pd",
    "parse_word",
    "ParseError",
    "presentation",
    "rebase",
    "reduce_longitudes",
    "ReducedLongitudes",
    "relative_max_basing",
    "rewrite_in_subgroup",
    "schreier_basis",
    "SchreierData",
    "table",
    "writhe",
]
