"""Shared fixture data for the test suite."""

from pdtool.connectivity import (
    blakers_massey,
    cell_lifting_feasible,
    join_stabilisation_connectivity,
    join_unit_connectivity,
    klein_embedding_feasible,
    mapping_space_connectivity,
    semifree_freudenthal,
    stabilisation_map_connectivity,
)
from pdtool.families import from_family

FIXTURE_NAMES = [f"C{n}" for n in range(1, 13)] + [
    "C2xC2",
    "C2xC4",
    "C3xC3",
    "D6",
    "D8",
    "D12",
    "Q8",
    "Q16",
    "S3",
    "S4",
    "A4",
    "SL23",
]
PERIODIC = {f"C{n}" for n in range(1, 13)} | {"D6", "Q8", "Q16", "S3", "SL23"}

_groups = {}


def group(name):
    """Groups are cached so resolutions built in one test are reused by the next."""
    if name not in _groups:
        _groups[name] = from_family(name)
    return _groups[name]


# every example command shown in the README
DOCUMENTED_COMMANDS = [
    ["swan", "--family", "Q8", "--dim", "3", "--format", "json"],
    ["isov", "--components", "2:9", "--format", "json"],
    ["period", "--family", "C2xC2"],
    ["period", "--family", "C2xC2", "--format", "json"],
    ["periodicity", "--family", "SL23", "--format", "json"],
    ["cohomology", "--family", "Q8", "--degree", "4", "--format", "json"],
    ["homology", "--family", "A4", "--degree", "3", "--format", "json"],
    ["invertible-spectra", "--family", "Q8", "--dim", "3", "--format", "json"],
    ["bounds", "--components", "2:9,-:7", "--format", "json"],
    ["explain", "--components", "2:9", "--format", "json"],
    ["isov", "--components", "0:3", "--one-connected", "--format", "json"],
    ["isov", "--components", "2:4", "--format", "json"],
]


def monotonicity_violations(rng, count):
    """Perturb one input at a time; returns the number of violations."""
    bad = 0
    for _ in range(count):
        c1, c2 = rng.randint(-2, 30), rng.randint(-2, 30)
        d1, d2 = rng.randint(0, 30), rng.randint(0, 30)
        up = lambda x: min(x + 1, 30)  # noqa: E731
        checks = [
            blakers_massey(up(c1), c2) >= blakers_massey(c1, c2),
            mapping_space_connectivity(up(c1), d1, c2, d2) >= mapping_space_connectivity(c1, d1, c2, d2),
            mapping_space_connectivity(c1, d1, up(c2), d2) >= mapping_space_connectivity(c1, d1, c2, d2),
            mapping_space_connectivity(c1, d1 + 1, c2, d2) <= mapping_space_connectivity(c1, d1, c2, d2),
            mapping_space_connectivity(c1, d1, c2, d2 + 1) <= mapping_space_connectivity(c1, d1, c2, d2),
            join_stabilisation_connectivity(up(c1), d1) >= join_stabilisation_connectivity(c1, d1),
            join_stabilisation_connectivity(c1, d1 + 1) <= join_stabilisation_connectivity(c1, d1),
            all(a >= b for a, b in zip(semifree_freudenthal(up(c1), c2), semifree_freudenthal(c1, c2))),
            all(a >= b for a, b in zip(semifree_freudenthal(c1, up(c2)), semifree_freudenthal(c1, c2))),
            stabilisation_map_connectivity(up(c1), d1, c2, d2) >= stabilisation_map_connectivity(c1, d1, c2, d2),
            stabilisation_map_connectivity(c1, d1 + 1, c2, d2) <= stabilisation_map_connectivity(c1, d1, c2, d2),
            klein_embedding_feasible(d1, d2, up(c1)) >= klein_embedding_feasible(d1, d2, c1),
            klein_embedding_feasible(d1 + 1, d2, c1) <= klein_embedding_feasible(d1, d2, c1),
            cell_lifting_feasible(d1, up(c1), c2) >= cell_lifting_feasible(d1, c1, c2),
            cell_lifting_feasible(d1, c1, up(c2)) >= cell_lifting_feasible(d1, c1, c2),
            cell_lifting_feasible(d1 + 1, c1, c2) <= cell_lifting_feasible(d1, c1, c2),
        ]
        if c1 >= 0:
            checks.append(join_unit_connectivity(up(c1)) >= join_unit_connectivity(c1))
        bad += checks.count(False)
    return bad


