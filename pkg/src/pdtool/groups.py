"""Finite groups as Cayley tables, plus the structural queries used by the periodicity tests.

Elements are indexed breadth-first from the identity (index 0), so every
table, subgroup and report is reproducible bit-for-bit.
"""

from dataclasses import dataclass, field
from math import gcd

from sympy import isprime

from pdtool.config import get_config
from pdtool.errors import BudgetExceeded, InvalidInput


def _compose(p, q):
    # apply q first, then p
    return tuple(p[i] for i in q)


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    order: int
    table: tuple
    element_orders: tuple
    origin: dict = field(default_factory=dict)
    perms: tuple = ()

    def __post_init__(self):
        inv = [0] * self.order
        for i, row in enumerate(self.table):
            inv[i] = row.index(0)
        object.__setattr__(self, "inverses", tuple(inv))

    def __repr__(self):
        return f"FiniteGroup(order={self.order}, origin={self.origin!r})"

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self.inverses[a]

    def power(self, a, n):
        x = 0
        for _ in range(n):
            x = self.table[x][a]
        return x

    def commute(self, a, b):
        return self.table[a][b] == self.table[b][a]

    def is_abelian(self):
        return all(self.commute(a, b) for a in range(self.order) for b in range(a))

    def whole(self):
        return Subgroup(self, tuple(range(self.order)))

    def trivial_subgroup(self):
        return Subgroup(self, (0,))


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup
    elements: tuple

    @property
    def order(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self._members

    @property
    def _members(self):
        s = self.__dict__.get("_set")
        if s is None:
            s = frozenset(self.elements)
            object.__setattr__(self, "_set", s)
        return s

    def as_group(self):
        """Re-index the subgroup as a standalone :class:`FiniteGroup`."""
        pos = {x: i for i, x in enumerate(self.elements)}
        t = self.parent.table
        table = tuple(tuple(pos[t[a][b]] for b in self.elements) for a in self.elements)
        orders = tuple(self.parent.element_orders[a] for a in self.elements)
        return FiniteGroup(len(self.elements), table, orders, {"subgroup_of": self.parent.origin})


def _element_orders(table):
    orders = []
    for a in range(len(table)):
        x, n = a, 1
        while x != 0:
            x = table[x][a]
            n += 1
        orders.append(n)
    return tuple(orders)


def _check_perm(p, degree):
    if len(p) != degree or sorted(p) != list(range(degree)):
        raise InvalidInput(f"not a permutation of degree {degree}: {list(p)}")


def from_permutations(generators, degree=None, origin=None, cap=None):
    """Close a list of permutations (image lists) under composition.

    >>> from_permutations([[1, 0]]).order
    2
    """
    gens = [tuple(int(x) for x in g) for g in generators]
    if not gens:
        raise InvalidInput("generator list is empty")
    if degree is None:
        degree = len(gens[0])
    for g in gens:
        _check_perm(g, degree)
    cap = get_config().order_cap if cap is None else cap

    ident = tuple(range(degree))
    index = {ident: 0}
    elems = [ident]
    head = 0
    while head < len(elems):
        x = elems[head]
        head += 1
        for g in gens:
            y = _compose(g, x)
            if y not in index:
                if len(elems) >= cap:
                    raise BudgetExceeded("group order cap", f">{cap}", cap)
                index[y] = len(elems)
                elems.append(y)

    table = tuple(tuple(index[_compose(a, b)] for b in elems) for a in elems)
    if origin is None:
        origin = {"permutations": {"degree": degree, "generators": [list(g) for g in gens]}}
    return FiniteGroup(len(elems), table, _element_orders(table), origin, tuple(elems))


def generate(G, gens):
    """Subgroup of ``G`` generated by the element indices ``gens``."""
    seen = {0}
    frontier = [0]
    gens = [g for g in gens if g != 0]
    t = G.table
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = t[x][g]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return Subgroup(G, tuple(sorted(seen)))


def _p_part(n, p):
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def _is_p_power(n, p):
    return _p_part(n, p) == n


def normalizer(G, H):
    t = G.table
    members = H._members
    out = []
    for g in range(G.order):
        gi = G.inverses[g]
        if all(t[t[g][h]][gi] in members for h in H.elements):
            out.append(g)
    return out


def sylow(G, p):
    """A Sylow ``p``-subgroup of ``G``.

    Seeds with the lowest-index nontrivial ``p``-element and grows one factor of
    ``p`` at a time inside the normalizer, so the answer is deterministic.
    """
    if not isprime(p):
        raise InvalidInput(f"{p} is not prime")
    target = _p_part(G.order, p)
    if target == 1:
        return G.trivial_subgroup()
    seed = next(g for g in range(1, G.order) if _is_p_power(G.element_orders[g], p))
    H = generate(G, [seed])
    while H.order < target:
        grown = None
        for g in normalizer(G, H):
            if g in H:
                continue
            # order of gH in N(H)/H
            x, k = g, 1
            while x not in H:
                x = G.table[x][g]
                k += 1
            if not _is_p_power(k, p):
                continue
            g_p = G.power(g, k // p)
            grown = generate(G, list(H.elements) + [g_p])
            break
        if grown is None:
            raise AssertionError("normalizer growth stalled before reaching the Sylow order")
        H = grown
    return H


def is_cyclic(H):
    orders = H.parent.element_orders
    return any(orders[x] == H.order for x in H.elements)


def is_generalised_quaternion(H):
    """2-group of order at least 8, noncyclic, with a unique involution.

    A finite 2-group with exactly one involution is cyclic or generalised
    quaternion, so this count is a complete test.
    """
    n = H.order
    if n < 8 or n & (n - 1):
        return False
    if is_cyclic(H):
        return False
    orders = H.parent.element_orders
    return sum(1 for x in H.elements if orders[x] == 2) == 1


def _cyclic_powers(G, a):
    seen = [0]
    x = a
    while x != 0:
        seen.append(x)
        x = G.table[x][a]
    return set(seen)


def noncyclic_commuting_pair(G):
    """First commuting pair ``(a, b)`` generating a noncyclic subgroup, or ``None``."""
    orders = G.element_orders
    powers = [None] * G.order
    for a in range(1, G.order):
        for b in range(1, a):
            if not G.commute(a, b):
                continue
            if powers[a] is None:
                powers[a] = _cyclic_powers(G, a)
            if powers[b] is None:
                powers[b] = _cyclic_powers(G, b)
            common = len(powers[a] & powers[b])
            size = orders[a] * orders[b] // common
            exponent = orders[a] * orders[b] // gcd(orders[a], orders[b])
            if exponent != size:
                return (b, a)
    return None


def has_noncyclic_abelian_subgroup(G):
    return noncyclic_commuting_pair(G) is not None


def prime_divisors(n):
    return [p for p in range(2, n + 1) if n % p == 0 and isprime(p)]
