import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import monotonicity_violations
from pdtool.connectivity import (
    FLOOR,
    ConnectivityBound,
    DimensionProfile,
    automorphism_comparison_connectivity,
    blakers_massey,
    cell_lifting_feasible,
    component_bounds,
    destabilisation_connectivity,
    explain_isov_connectivity,
    isov_space_connectivity,
    join_stabilisation_connectivity,
    join_unit_connectivity,
    klein_embedding_feasible,
    mapping_space_connectivity,
    semifree_freudenthal,
    stabilisation_map_connectivity,
)
from pdtool.errors import HypothesisViolated

conn = st.integers(-2, 30)
dim = st.integers(0, 30)


def test_examples():
    assert blakers_massey(2, 3) == 5
    assert blakers_massey(0, 0) == 0
    assert blakers_massey(-2, 5) == -2
    assert mapping_space_connectivity(6, 4, 2, 1) == 1
    assert mapping_space_connectivity(5, 5, semifree=False) == 0
    assert mapping_space_connectivity(-2, 0, 10, 0) == -2
    assert join_unit_connectivity(0) == 1
    assert join_unit_connectivity(3) == 7
    assert join_stabilisation_connectivity(2, 5) == 0
    assert join_stabilisation_connectivity(0, 1) == 0
    assert join_stabilisation_connectivity(0, 5) == -2
    assert semifree_freudenthal(4, 1) == (9, 3)
    assert semifree_freudenthal(0, 0) == (1, 0)
    assert semifree_freudenthal(10, 0) == (21, 1)
    assert stabilisation_map_connectivity(5, 4, 1, 1) == 2
    assert stabilisation_map_connectivity(0, 0, 0, 0) == 0
    assert stabilisation_map_connectivity(3, 9, 3, 0) == -2
    assert destabilisation_connectivity(2) == 1
    assert destabilisation_connectivity(7) == 6
    assert automorphism_comparison_connectivity(1) == 0
    assert automorphism_comparison_connectivity(4) == 3
    assert klein_embedding_feasible(2, 9, 0)
    assert not klein_embedding_feasible(5, 7, 10)
    assert not klein_embedding_feasible(3, 6, 1)
    assert cell_lifting_feasible(4, 2, 2)
    assert not cell_lifting_feasible(5, 2, 2)
    assert not cell_lifting_feasible(0, -2, 2)


def test_hypotheses_are_errors():
    with pytest.raises(HypothesisViolated):
        join_unit_connectivity(-1)
    with pytest.raises(HypothesisViolated):
        destabilisation_connectivity(1)
    with pytest.raises(HypothesisViolated):
        automorphism_comparison_connectivity(0)


def test_isov_examples():
    assert isov_space_connectivity([(2, 9)]) == 2
    assert isov_space_connectivity([(2, 4)]) is None
    assert isov_space_connectivity(DimensionProfile.of([(0, 3)], one_connected=True)) == 1
    assert isov_space_connectivity([(1, 4)]) == -1
    assert isov_space_connectivity([(3, 6)]) is None  # bound -3 says nothing
    assert isov_space_connectivity([(2, 9), (0, 4)]) == 1
    assert isov_space_connectivity([(None, 7)]).value is None
    assert isov_space_connectivity([(None, 2), (2, 9)]) == 2


def test_explain_examples():
    for (dG, de), (s1, s2, s3, k) in {
        (2, 9): (4, 2, 8, 2),
        (0, 3): (2, 0, 2, 0),
        (1, 4): (1, -1, 1, -1),
    }.items():
        t = explain_isov_connectivity([(dG, de)])
        assert t.by_rule("step1")[0].output == s1
        assert t.by_rule("step2")[0].output == s2
        assert t.by_rule("step3")[0].output == s3
        assert t.by_rule("destabilisation")[0].output == de - dG - 1
        assert t.final == k
    with pytest.raises(HypothesisViolated):
        explain_isov_connectivity([(2, 4)])


def test_explain_matches_isov():
    for dG in range(0, 8):
        for de in range(dG + 3, 25):
            for flag in (False, True):
                p = DimensionProfile.of([(dG, de), (0, de + 1)], one_connected=flag)
                t = explain_isov_connectivity(p)
                k = isov_space_connectivity(p)
                assert t.final == k
                if k is not None:
                    step2 = min(s.output for s in t.by_rule("step2"))
                    assert k.value == step2 + (1 if flag else 0)


def test_profile_parsing_and_json():
    p = DimensionProfile.parse("2:9,-:7", one_connected=True)
    assert p.to_json() == {"components": [{"d_G": 2, "d_e": 9}, {"d_G": None, "d_e": 7}], "one_connected": True}
    assert DimensionProfile.from_json(p.to_json()) == p
    with pytest.raises(ValueError):
        DimensionProfile.parse("2;9")
    with pytest.raises(ValueError):
        DimensionProfile.of([(5, 3)])


def test_component_bounds():
    b = component_bounds(2, 9)
    assert (b["destabilisation"], b["mapping_space"], b["embedding_constraint"], b["comparison_constraint"]) == (
        6,
        4,
        2,
        8,
    )
    assert component_bounds(None, 4) == {"d_G": None, "d_e": 4, "codimension_ok": True}


def test_bound_type():
    assert ConnectivityBound(-7) == FLOOR
    assert not ConnectivityBound(-2).informative
    assert ConnectivityBound(3) < ConnectivityBound.unbounded()
    assert ConnectivityBound(-1).meaning() == "nonempty"
    assert ConnectivityBound(2).meaning() == "2-connected"
    assert int(ConnectivityBound(4)) == 4


@given(conn, conn)
def test_blakers_massey_never_below_floor(n, m):
    v = blakers_massey(n, m).value
    assert v >= FLOOR
    if FLOOR in (n, m):
        assert v == FLOOR


@given(conn, dim, conn, dim)
def test_stabilisation_monotone(c_e, d_e, c_G, d_G):
    v = stabilisation_map_connectivity(c_e, d_e, c_G, d_G)
    assert stabilisation_map_connectivity(min(c_e + 1, 30), d_e, c_G, d_G) >= v
    assert stabilisation_map_connectivity(c_e, d_e, min(c_G + 1, 30), d_G) >= v
    assert stabilisation_map_connectivity(c_e, d_e + 1, c_G, d_G) <= v
    assert stabilisation_map_connectivity(c_e, d_e, c_G, d_G + 1) <= v


def test_monotonicity_random_inputs():
    assert monotonicity_violations(random.Random(7), 5000) == 0
