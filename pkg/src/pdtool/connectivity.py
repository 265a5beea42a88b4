"""Exact arithmetic on connectivity bounds.

All values are lower bounds on connectivity.  ``-1`` means "nonempty" and
``-2`` is the floor meaning "no information": every result is clamped to it,
and it absorbs in every formula, so a bound built from an unknown input is
itself unknown.  With this convention each operation is monotone:
nondecreasing in connectivities and nonincreasing in dimensions.

Formulas whose hypotheses fail (for instance a destabilisation statement for
``k < 2``) raise :class:`HypothesisViolated` instead of returning a number.
"""

import json
from dataclasses import dataclass, field
from functools import total_ordering
from typing import Optional

from pdtool.errors import HypothesisViolated, InvalidInput

FLOOR = -2


@total_ordering
class ConnectivityBound:
    """An integer connectivity bound ``>= -2``, or ``None`` for unbounded.

    A small immutable value type; plain ints are accepted wherever a bound is
    expected.
    """

    __slots__ = ("_value",)

    def __init__(self, value):
        if value is not None:
            value = int(value)
            if value < FLOOR:
                value = FLOOR
        object.__setattr__(self, "_value", value)

    def __setattr__(self, name, value):
        raise AttributeError("ConnectivityBound is immutable")

    @property
    def value(self):
        return self._value

    @classmethod
    def unbounded(cls):
        return cls(None)

    @property
    def informative(self):
        return self._value is None or self._value > FLOOR

    def __int__(self):
        if self._value is None:
            raise ValueError("unbounded connectivity has no integer value")
        return self._value

    def __lt__(self, other):
        other = _as_bound(other)
        if self._value is None:
            return False
        return other._value is None or self._value < other._value

    def __eq__(self, other):
        if isinstance(other, int):
            return self._value == other
        return isinstance(other, ConnectivityBound) and self._value == other._value

    def __hash__(self):
        return hash(self._value)

    def __repr__(self):
        return f"ConnectivityBound({self._value!r})"

    def meaning(self):
        if self._value is None:
            return "no constraint"
        if self._value == FLOOR:
            return "no information"
        if self._value == -1:
            return "nonempty"
        return f"{self._value}-connected"

    def __str__(self):
        return "unbounded" if self._value is None else str(self._value)


def _as_bound(x):
    return x if isinstance(x, ConnectivityBound) else ConnectivityBound(x)


def _raw(x):
    """Integer value of a finite bound (plain ints are accepted)."""
    if type(x) is int:
        return x if x > FLOOR else FLOOR
    b = _as_bound(x)
    if b.value is None:
        raise InvalidInput("a finite connectivity bound is required")
    return b.value


def _bound(value, *inputs):
    """Clamp ``value``; any no-information input makes the result no-information."""
    if FLOOR in inputs:
        return ConnectivityBound(FLOOR)
    return ConnectivityBound(value)


def _nonneg(name, v):
    if v < 0:
        raise InvalidInput(f"{name} must be >= 0, got {v}")


def blakers_massey(n, m):
    """Connectivity ``n + m`` of the comparison map of an ``n``/``m``-connected square."""
    n, m = _raw(n), _raw(m)
    return _bound(n + m, n, m)


def mapping_space_connectivity(c_e, d_e, c_G=None, d_G=None, semifree=True):
    """Connectivity of a space of equivariant maps out of a relative complex.

    Uses connectivity minus dimension: ``min(c_e - d_e, c_G - d_G)`` for a
    semifree pair, ``c_e - d_e`` for a free pair.
    """
    c_e = _raw(c_e)
    _nonneg("d_e", d_e)
    if not semifree:
        return _bound(c_e - d_e, c_e)
    if c_G is None or d_G is None:
        raise InvalidInput("a semifree pair needs both c_G and d_G")
    c_G = _raw(c_G)
    _nonneg("d_G", d_G)
    return _bound(min(c_e - d_e, c_G - d_G), c_e, c_G)


def join_unit_connectivity(k):
    """Connectivity ``2k + 1`` of the unit of the join with a ``k``-connected space."""
    k = _raw(k)
    if k < 0:
        raise HypothesisViolated(f"the join unit bound needs k >= 0, got {k}")
    return ConnectivityBound(2 * k + 1)


def join_stabilisation_connectivity(k, d):
    """Connectivity ``2k + 1 - d`` of join stabilisation on ``d``-dimensional sources."""
    k = _raw(k)
    _nonneg("d", d)
    return _bound(2 * k + 1 - d, k)


def semifree_freudenthal(c_e, c_G):
    """Suspension connectivity on underlying and fixed points: ``(2c_e + 1, min(2c_G + 1, c_e))``."""
    c_e, c_G = _raw(c_e), _raw(c_G)
    return _bound(2 * c_e + 1, c_e), _bound(min(2 * c_G + 1, c_e), c_e, c_G)


def stabilisation_map_connectivity(c_e, d_e, c_G, d_G):
    """``min(2c_e + 1 - d_e, min(2c_G + 1, c_e) - d_G)``."""
    c_e, c_G = _raw(c_e), _raw(c_G)
    _nonneg("d_e", d_e)
    _nonneg("d_G", d_G)
    return _bound(min(2 * c_e + 1 - d_e, min(2 * c_G + 1, c_e) - d_G), c_e, c_G)


def destabilisation_connectivity(k):
    """Connectivity ``k - 1`` of the destabilisation comparison in codimension ``k >= 2``."""
    if k < 2:
        raise HypothesisViolated(f"destabilisation needs k >= 2, got {k}")
    return ConnectivityBound(k - 1)


def automorphism_comparison_connectivity(r):
    """Connectivity ``r - 1`` of the automorphism comparison in dimension ``r >= 1``."""
    if r < 1:
        raise HypothesisViolated(f"the automorphism comparison needs r >= 1, got {r}")
    return ConnectivityBound(r - 1)


def klein_embedding_feasible(k, d, r):
    """Codimension-three embedding condition: ``k <= d - 3`` and ``r >= 2k - d + 2``."""
    _nonneg("k", k)
    _nonneg("d", d)
    r = _raw(r)
    return k <= d - 3 and r >= 2 * k - d + 2


def cell_lifting_feasible(k, conn_g, conn_f):
    """A ``k``-cell lifts when ``k <= conn(g) + conn(f)`` and ``conn(f) >= 2``.

    The sum goes through :func:`blakers_massey`, so an unknown ``conn(g)``
    never certifies a lift.
    """
    _nonneg("k", k)
    total = blakers_massey(conn_g, conn_f)
    return total.informative and k <= total.value and _raw(conn_f) >= 2


@dataclass(frozen=True)
class Component:
    """One component: fixed-point dimension (``None`` if the fixed set is empty) and ambient dimension."""

    d_G: Optional[int]
    d_e: int

    def __post_init__(self):
        _nonneg("d_e", self.d_e)
        if self.d_G is not None:
            _nonneg("d_G", self.d_G)
            if self.d_G > self.d_e:
                raise InvalidInput(f"fixed dimension {self.d_G} exceeds ambient dimension {self.d_e}")

    @property
    def has_fixed_points(self):
        return self.d_G is not None

    def codimension_ok(self):
        return self.d_G is None or self.d_G + 3 <= self.d_e


@dataclass(frozen=True)
class DimensionProfile:
    components: tuple
    one_connected: bool = False

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))

    @classmethod
    def of(cls, pairs, one_connected=False):
        """Build from ``(d_G, d_e)`` pairs."""
        return cls(tuple(Component(g, e) for g, e in pairs), one_connected)

    @classmethod
    def parse(cls, text, one_connected=False):
        """Parse ``"dG:dE,dG:dE"``; an empty fixed set is written ``-:dE``."""
        pairs = []
        for item in text.split(","):
            try:
                g, e = item.strip().split(":")
                g = None if g.strip() in ("-", "", "none", "empty") else int(g)
                pairs.append((g, int(e)))
            except ValueError:
                raise InvalidInput(f"bad component {item!r}; expected dG:dE") from None
        if not pairs:
            raise InvalidInput("at least one component is required")
        return cls.of(pairs, one_connected)

    def to_json(self):
        return {
            "components": [{"d_G": c.d_G, "d_e": c.d_e} for c in self.components],
            "one_connected": self.one_connected,
        }

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        comps = [(c["d_G"], c["d_e"]) for c in obj["components"]]
        return cls.of(comps, bool(obj.get("one_connected", False)))


def _profile(p):
    return p if isinstance(p, DimensionProfile) else DimensionProfile.of(p)


def isovariant_constraint(d_G, d_e):
    """Per-component bound ``d_e - 2 d_G - 3`` (unclamped)."""
    return d_e - 2 * d_G - 3


def isov_space_connectivity(profile):
    """Connectivity of the space of isovariant structures, or ``None`` if nothing follows.

    ``None`` when some component with fixed points has codimension below
    three, or when the bound falls below ``-1``.  Components with empty fixed
    set impose no constraint; if no component has fixed points the result is
    unbounded.  A 1-connected fixed-point inclusion adds one.

    >>> isov_space_connectivity([(2, 9)])
    ConnectivityBound(2)
    """
    profile = _profile(profile)
    if not all(c.codimension_ok() for c in profile.components):
        return None
    values = [isovariant_constraint(c.d_G, c.d_e) for c in profile.components if c.has_fixed_points]
    if not values:
        return ConnectivityBound.unbounded()
    k = min(values)
    if k < -1:
        return None
    return ConnectivityBound(k + 1 if profile.one_connected else k)


@dataclass(frozen=True)
class Step:
    rule: str
    statement: str
    inputs: dict
    output: object

    def to_json(self):
        out = self.output
        if isinstance(out, ConnectivityBound):
            out = out.value
        return {"rule": self.rule, "statement": self.statement, "inputs": dict(self.inputs), "output": out}


@dataclass
class DerivationTrace:
    steps: list = field(default_factory=list)
    final: Optional[ConnectivityBound] = None

    def add(self, rule, statement, inputs, output):
        self.steps.append(Step(rule, statement, inputs, output))

    def by_rule(self, rule):
        return [s for s in self.steps if s.rule == rule]

    def to_json(self):
        return {
            "steps": [s.to_json() for s in self.steps],
            "final": None if self.final is None else self.final.value,
            "meaning": "no conclusion" if self.final is None else self.final.meaning(),
        }


def explain_isov_connectivity(profile):
    """Derivation of :func:`isov_space_connectivity`, one block of steps per component.

    Per component with fixed points: destabilisation ``d_e - d_G - 1``,
    mapping-space bound ``d_e - 2 d_G - 1``, embedding constraint
    ``n <= d_e - 2 d_G - 3`` and fibration-comparison constraint
    ``n <= 2 d_e - 3 d_G - 4``.  The final bound is the binding minimum; the
    comparison constraint is checked never to bind in codimension three.
    """
    profile = _profile(profile)
    bad = [c for c in profile.components if not c.codimension_ok()]
    if bad:
        c = bad[0]
        raise HypothesisViolated(f"codimension condition d_G + 3 <= d_e fails for d_G={c.d_G}, d_e={c.d_e}")
    trace = DerivationTrace()
    limits = []
    for idx, c in enumerate(profile.components):
        inputs = {"component": idx, "d_G": c.d_G, "d_e": c.d_e}
        if not c.has_fixed_points:
            trace.add("empty-fixed-set", "no constraint from a component without fixed points", inputs, None)
            continue
        dG, de = c.d_G, c.d_e
        trace.add(
            "destabilisation",
            "destabilisation in codimension d_e - d_G is (d_e - d_G - 1)-connected",
            inputs,
            destabilisation_connectivity(de - dG),
        )
        trace.add("step1", "mapping space is (d_e - 2 d_G - 1)-connected", inputs, ConnectivityBound(de - 2 * dG - 1))
        step2 = isovariant_constraint(dG, de)
        step3 = 2 * de - 3 * dG - 4
        trace.add("step2", "embedding needs n <= d_e - 2 d_G - 3", inputs, step2)
        trace.add("step3", "fibration comparison needs n <= 2 d_e - 3 d_G - 4", inputs, step3)
        if step3 < step2:
            raise AssertionError(f"comparison constraint binds at d_G={dG}, d_e={de}")
        limits.append(min(step2, step3))
    if not limits:
        trace.final = ConnectivityBound.unbounded()
        return trace
    k = min(limits)
    trace.add("binding-minimum", "k is the smallest constraint over all components", {"constraints": limits}, k)
    if k < -1:
        trace.final = None
        return trace
    if profile.one_connected:
        trace.add("one-connected", "a 1-connected fixed-point inclusion improves k by one", {"k": k}, k + 1)
        k += 1
    trace.final = ConnectivityBound(k)
    return trace


def component_bounds(d_G, d_e):
    """Every bound attached to one component, as plain integers (``None`` when a hypothesis fails)."""
    out = {"d_G": d_G, "d_e": d_e, "codimension_ok": d_G is None or d_G + 3 <= d_e}
    if d_G is None:
        return out
    codim = d_e - d_G
    out["destabilisation"] = destabilisation_connectivity(codim).value if codim >= 2 else None
    out["mapping_space"] = max(FLOOR, d_e - 2 * d_G - 1)
    out["embedding_constraint"] = isovariant_constraint(d_G, d_e)
    out["comparison_constraint"] = 2 * d_e - 3 * d_G - 4
    return out
