"""Exact tools for periodic finite groups, Swan counts and isovariant connectivity bounds."""

from pdtool.config import Config, get_config
from pdtool.errors import BudgetExceeded, InconsistentCriteria, PdtoolError
from pdtool.families import from_family
from pdtool.groups import (
    FiniteGroup,
    Subgroup,
    from_permutations,
    has_noncyclic_abelian_subgroup,
    is_cyclic,
    is_generalised_quaternion,
    sylow,
)
from pdtool.homology import AbelianInvariants, cohomology, homology, tate_cohomology
from pdtool.periodicity import (
    PeriodicityReport,
    is_periodic_via_abelian,
    is_periodic_via_sylow,
    period,
    periodicity_report,
)
from pdtool.swan import (
    SwanClassification,
    classify_hreps,
    count_free_invertible_spectra,
    is_unit_degree,
)

__all__ = [
    "AbelianInvariants",
    "BudgetExceeded",
    "Config",
    "FiniteGroup",
    "InconsistentCriteria",
    "PdtoolError",
    "PeriodicityReport",
    "Subgroup",
    "SwanClassification",
    "classify_hreps",
    "cohomology",
    "count_free_invertible_spectra",
    "from_family",
    "from_permutations",
    "get_config",
    "has_noncyclic_abelian_subgroup",
    "homology",
    "is_cyclic",
    "is_generalised_quaternion",
    "is_periodic_via_abelian",
    "is_periodic_via_sylow",
    "is_unit_degree",
    "period",
    "periodicity_report",
    "sylow",
    "tate_cohomology",
]
