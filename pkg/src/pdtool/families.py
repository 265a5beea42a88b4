"""Named group families realised as permutation groups, and the shorthand grammar.

Shorthand (frozen)::

    C<n>        cyclic of order n              C6
    D<2n>       dihedral of order 2n           D8
    Q<4n>       generalised quaternion, n>=2   Q8, Q16
    S<n>, A<n>  symmetric / alternating, n<=5  S4, A4
    SL23        SL(2, 3)
    X x Y       direct product                 C2xC4, C2xC2xC2
"""

import re

from pdtool.errors import InvalidInput
from pdtool.groups import from_permutations

FAMILIES = (
    "Cyclic",
    "Dihedral",
    "GeneralisedQuaternion",
    "Symmetric",
    "Alternating",
    "SL23",
    "DirectProduct",
)

_ALIASES = {
    "c": "Cyclic",
    "cyclic": "Cyclic",
    "d": "Dihedral",
    "dihedral": "Dihedral",
    "q": "GeneralisedQuaternion",
    "quaternion": "GeneralisedQuaternion",
    "generalisedquaternion": "GeneralisedQuaternion",
    "generalizedquaternion": "GeneralisedQuaternion",
    "s": "Symmetric",
    "symmetric": "Symmetric",
    "a": "Alternating",
    "alternating": "Alternating",
    "sl23": "SL23",
    "sl(2,3)": "SL23",
    "directproduct": "DirectProduct",
}


def _cycle(n):
    return [(i + 1) % n for i in range(n)]


def _regular(elements, mul, gens):
    index = {e: i for i, e in enumerate(elements)}
    return [[index[mul(g, e)] for e in elements] for g in gens]


def _quaternion_gens(order):
    m = order // 2  # a has order m = 2n
    n = m // 2
    elements = [(i, j) for j in range(2) for i in range(m)]

    def mul(x, y):
        i, j = x
        k, l = y
        e = i + (k if j == 0 else -k)
        if j == 1 and l == 1:
            e += n
        return (e % m, (j + l) % 2)

    return _regular(elements, mul, [(1, 0), (0, 1)])


def _sl23_gens():
    vecs = [(x, y) for x in range(3) for y in range(3) if (x, y) != (0, 0)]
    index = {v: i for i, v in enumerate(vecs)}

    def act(m):
        (a, b), (c, d) = m
        return [index[((a * x + b * y) % 3, (c * x + d * y) % 3)] for x, y in vecs]

    return [act(((1, 1), (0, 1))), act(((1, 0), (1, 1)))]


def _product_gens(left, right):
    dl, dr = len(left[0]), len(right[0])
    gens = [list(g) + list(range(dl, dl + dr)) for g in left]
    gens += [list(range(dl)) + [dl + x for x in g] for g in right]
    return gens


def _gens(desc):
    name, params = desc["name"], desc.get("params", [])
    if name == "DirectProduct":
        if len(params) != 2:
            raise InvalidInput("DirectProduct takes exactly two family descriptors")
        return _product_gens(_gens(normalise(params[0])), _gens(normalise(params[1])))
    if name == "SL23":
        return _sl23_gens()
    if len(params) != 1 or not isinstance(params[0], int) or params[0] < 1:
        raise InvalidInput(f"{name} takes one positive integer parameter, got {params}")
    n = params[0]
    if name == "Cyclic":
        return [_cycle(n)]
    if name == "Dihedral":
        if n % 2 or n < 4:
            raise InvalidInput(f"Dihedral(2n) needs an even order >= 4, got {n}")
        k = n // 2
        if k == 2:
            return [[1, 0, 3, 2], [2, 3, 0, 1]]
        return [_cycle(k), [(-i) % k for i in range(k)]]
    if name == "GeneralisedQuaternion":
        if n % 4 or n < 8:
            raise InvalidInput(f"GeneralisedQuaternion(4n) needs n >= 2, got order {n}")
        return _quaternion_gens(n)
    if name == "Symmetric":
        if n > 5:
            raise InvalidInput("Symmetric(n) is supported for n <= 5")
        if n <= 1:
            return [[0]]
        if n == 2:
            return [[1, 0]]
        return [_cycle(n), [1, 0] + list(range(2, n))]
    if name == "Alternating":
        if n > 5:
            raise InvalidInput("Alternating(n) is supported for n <= 5")
        if n <= 2:
            return [list(range(max(n, 1)))]
        gens = []
        for i in range(2, n):
            p = list(range(n))
            p[0], p[1], p[i] = 1, i, 0
            gens.append(p)
        return gens
    raise InvalidInput(f"unknown family {name!r}")


def normalise(desc):
    """Canonical ``{"name": ..., "params": [...]}`` form of a family descriptor."""
    if isinstance(desc, str):
        return parse_shorthand(desc)
    if not isinstance(desc, dict) or "name" not in desc:
        raise InvalidInput(f"malformed family descriptor: {desc!r}")
    key = str(desc["name"]).replace(" ", "").replace("_", "").lower()
    name = _ALIASES.get(key, desc["name"])
    if name not in FAMILIES:
        raise InvalidInput(f"unknown family {desc['name']!r}")
    params = list(desc.get("params", []))
    if name == "DirectProduct":
        params = [normalise(p) for p in params]
    return {"name": name, "params": params}


def from_family(name, params=(), cap=None):
    """Build a named group; ``name`` may also be a shorthand like ``"C2xC4"``."""
    if isinstance(name, dict):
        desc = normalise(name)
    elif not params and isinstance(name, str) and name not in FAMILIES:
        desc = parse_shorthand(name)
    else:
        desc = normalise({"name": name, "params": list(params)})
    gens = _gens(desc)
    return from_permutations(gens, origin={"family": desc}, cap=cap)


_TOKEN = re.compile(r"^(SL23|SL\(2,3\)|[CDQSA])(\d+)?$", re.IGNORECASE)


def parse_shorthand(text):
    parts = [p for p in re.split(r"[x×*]", text.replace(" ", "")) if p]
    if not parts:
        raise InvalidInput(f"empty group shorthand {text!r}")
    descs = []
    for part in parts:
        m = _TOKEN.match(part)
        if not m:
            raise InvalidInput(f"cannot parse group shorthand {part!r}")
        head, num = m.group(1).upper(), m.group(2)
        if head.startswith("SL"):
            if num:
                raise InvalidInput(f"cannot parse group shorthand {part!r}")
            descs.append({"name": "SL23", "params": []})
        else:
            if num is None:
                raise InvalidInput(f"missing order in {part!r}")
            descs.append(normalise({"name": head, "params": [int(num)]}))
    desc = descs[-1]
    for left in reversed(descs[:-1]):
        desc = {"name": "DirectProduct", "params": [left, desc]}
    return desc


def group_from_json(obj, cap=None):
    """Group input JSON: ``{"permutations": {...}}`` or ``{"family": {...}}``."""
    if "permutations" in obj:
        perm = obj["permutations"]
        return from_permutations(perm["generators"], degree=perm.get("degree"), cap=cap)
    if "family" in obj:
        return from_family(obj["family"], cap=cap)
    raise InvalidInput("group JSON needs a 'permutations' or 'family' key")
