"""Three independent routes to deciding whether a finite group is periodic.

* abelian subgroups: every abelian subgroup is cyclic;
* Sylow subgroups: cyclic for odd primes, cyclic or generalised quaternion
  for the prime 2;
* cohomology: some positive degree ``n`` has ``H^n(G; Z) = Z/|G|``.

The first two are decisive and must agree.  The third is only semi-decidable
under a degree bound, so a failed search is reported as such and never read
as "not periodic".
"""

import enum
from dataclasses import dataclass
from typing import Optional

from pdtool.config import get_config
from pdtool.errors import InconsistentCriteria, InvalidInput
from pdtool.groups import (
    has_noncyclic_abelian_subgroup,
    is_cyclic,
    is_generalised_quaternion,
    prime_divisors,
    sylow,
)
from pdtool.homology import cohomology


class CohomologyVerdict(enum.Enum):
    WITNESS = "witness"
    NO_WITNESS_BELOW_BOUND = "no-witness-below-bound"
    NOT_SEARCHED = "not-searched"


def is_periodic_via_abelian(G):
    return not has_noncyclic_abelian_subgroup(G)


def is_periodic_via_sylow(G):
    for p in prime_divisors(G.order):
        P = sylow(G, p)
        if is_cyclic(P):
            continue
        if p == 2 and is_generalised_quaternion(P):
            continue
        return False
    return True


def _default_bound(bound):
    return get_config().degree_cap if bound is None else bound


def _is_witness(G, n, method):
    return cohomology(G, n, method).is_cyclic_of_order(G.order)


def period(G, bound=None, method="free"):
    """Smallest ``1 <= n <= bound`` with ``H^n(G; Z) = Z/|G|``, or ``None``.

    When a period ``p`` is found and ``2p <= bound`` the degree ``2p`` is
    checked as well; a failure there raises :class:`InconsistentCriteria`.

    >>> from pdtool.families import from_family
    >>> period(from_family("C6"))
    2
    """
    if G.order == 1:
        raise InvalidInput("the period of the trivial group is not defined")
    bound = _default_bound(bound)
    for n in range(1, bound + 1):
        if _is_witness(G, n, method):
            if 2 * n <= bound and not _is_witness(G, 2 * n, method):
                raise InconsistentCriteria(f"H^{n} is a witness but H^{2 * n} is not")
            return n
    return None


@dataclass(frozen=True)
class PeriodicityReport:
    group: object
    via_abelian: bool
    via_sylow: bool
    via_cohomology: CohomologyVerdict
    period: Optional[int]
    search_bound: int

    @property
    def periodic(self):
        return self.via_abelian

    def to_json(self):
        return {
            "group": getattr(self.group, "origin", None),
            "order": self.group.order,
            "via_abelian": self.via_abelian,
            "via_sylow": self.via_sylow,
            "via_cohomology": self.via_cohomology.value,
            "period": self.period,
            "search_bound": self.search_bound,
        }


def periodicity_report(G, bound=None, method="free"):
    """Run every route and cross-check them.

    Raises :class:`InconsistentCriteria` when the two group-theoretic criteria
    disagree, or when a cohomological witness turns up for a group they call
    non-periodic.
    """
    bound = _default_bound(bound)
    via_abelian = is_periodic_via_abelian(G)
    via_sylow = is_periodic_via_sylow(G)
    if via_abelian != via_sylow:
        raise InconsistentCriteria(
            f"abelian-subgroup criterion says {via_abelian}, Sylow criterion says {via_sylow}"
        )
    if G.order == 1:
        # every degree is vacuously a witness; there is nothing to search
        return PeriodicityReport(G, True, True, CohomologyVerdict.NOT_SEARCHED, None, bound)
    p = period(G, bound, method)
    if p is not None and not via_abelian:
        raise InconsistentCriteria(f"H^{p} = Z/{G.order} for a group with a noncyclic abelian subgroup")
    verdict = CohomologyVerdict.WITNESS if p is not None else CohomologyVerdict.NO_WITNESS_BELOW_BOUND
    return PeriodicityReport(G, via_abelian, via_sylow, verdict, p, bound)
