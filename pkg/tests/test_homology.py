import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import group
from pdtool.errors import BudgetExceeded, InvalidInput
from pdtool.homology import AbelianInvariants, cohomology, homology, invariant_factors, tate_cohomology


def inv(*torsion, free=0):
    return AbelianInvariants(free, torsion)


@pytest.mark.parametrize(
    "name,n,expected",
    [
        ("C2", 1, inv(2)),
        ("C6", 1, inv(6)),
        ("S3", 1, inv(2)),
        ("Q8", 1, inv(2, 2)),
        ("Q8", 3, inv(8)),
        ("A4", 1, inv(3)),
        ("A4", 2, inv(2)),
        ("A4", 3, inv(6)),
        ("C2xC2", 2, inv(2)),
        ("C1", 0, inv(free=1)),
        ("C5", 2, inv()),
    ],
)
def test_known_homology(name, n, expected):
    assert homology(group(name), n) == expected


@pytest.mark.parametrize(
    "name,n,expected",
    [
        ("Q8", 0, inv(free=1)),
        ("Q8", 2, inv(2, 2)),
        ("Q8", 4, inv(8)),
        ("Q8", 8, inv(8)),
        ("SL23", 2, inv(3)),
        ("SL23", 4, inv(24)),
        ("S3", 4, inv(6)),
        ("C2xC2", 3, inv(2)),
        ("C2xC2", 4, inv(2, 2, 2)),
    ],
)
def test_known_cohomology(name, n, expected):
    assert cohomology(group(name), n) == expected


@pytest.mark.parametrize("name", ["C2", "C5", "C6", "C8"])
def test_three_routes_agree_on_cyclic_groups(name):
    G = group(name)
    for n in range(0, 5):
        a = cohomology(G, n, "free")
        assert a == cohomology(G, n, "periodic") == cohomology(G, n, "bar")
        assert homology(G, n, "free") == homology(G, n, "periodic") == homology(G, n, "bar")


@pytest.mark.parametrize("name", ["S3", "C2xC2", "Q8", "D8"])
def test_bar_and_free_agree(name):
    G = group(name)
    top = 4 if G.order <= 6 else 3
    for n in range(0, top + 1):
        assert cohomology(G, n, "bar") == cohomology(G, n, "free")


def test_periodic_route_rejects_noncyclic_groups():
    with pytest.raises(InvalidInput):
        cohomology(group("Q8"), 2, "periodic")
    with pytest.raises(InvalidInput):
        cohomology(group("C4"), 2, "spectral")


def test_degree_limits():
    with pytest.raises(BudgetExceeded):
        cohomology(group("C2"), 9)
    with pytest.raises(InvalidInput):
        homology(group("C2"), -1)
    with pytest.raises(InvalidInput):
        tate_cohomology(group("C2"), 0)
    assert tate_cohomology(group("C3"), 2) == inv(3)


def test_invariants_are_canonical():
    assert inv(2, 3) == inv(6)
    assert inv(4, 2, 3) == inv(2, 12)
    assert str(inv(2, 2)) == "Z/2 + Z/2"
    assert str(inv(free=2)) == "Z + Z"
    assert str(inv()) == "0"
    assert inv(8).is_cyclic_of_order(8)
    assert not inv(2, 4).is_cyclic_of_order(8)
    assert inv().is_cyclic_of_order(1)
    assert inv(3, free=1).order is None
    a = inv(2, 12, free=1)
    assert AbelianInvariants.from_json(a.to_json()) == a


@given(st.lists(st.integers(1, 200), max_size=6))
def test_invariant_factors_preserve_order_and_divide(orders):
    f = invariant_factors(orders)
    prod = 1
    for x in orders:
        prod *= x
    got = 1
    for x in f:
        got *= x
    assert got == prod
    assert all(b % a == 0 for a, b in zip(f, f[1:]))
    assert all(x > 1 for x in f)
