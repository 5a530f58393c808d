"""Representatives of the derived equivalence classes of gentle two-cycle
bound quivers.

Arrow names follow the family diagrams (``alpha1``, ``beta``, ...); vertices
are numbered ``"1"``, ``"2"``, ... along the arrow chains so output is
reproducible.
"""

from gentle.core import BoundQuiver, Quiver
from gentle.errors import InputError


def _chain(prefix, length, start, end, fresh):
    """Arrows ``prefix{length} ... prefix1`` walking from ``start`` to ``end``.

    ``prefix{length}`` leaves ``start``; ``prefix1`` enters ``end``.
    """
    names = [f"{prefix}{i}" for i in range(1, length + 1)]
    if length == 0:
        return []
    inner = [fresh() for _ in range(length - 1)]
    stops = [start] + inner + [end]
    # stops[k] -> stops[k+1] is arrow number length - k
    return [(names[length - 1 - k], stops[k], stops[k + 1]) for k in range(length)]


class _Numbering:
    def __init__(self):
        self.n = 0

    def __call__(self):
        self.n += 1
        return str(self.n)


def _assemble(arrows, relations):
    used = []
    for _, s, t in arrows:
        for v in (s, t):
            if v not in used:
                used.append(v)
    # renumber vertices in order of first appearance
    rename = {v: str(i) for i, v in enumerate(used, start=1)}
    arrows = [(n, rename[s], rename[t]) for n, s, t in arrows]
    return BoundQuiver(Quiver(rename.values(), arrows), [r.split() for r in relations])


def lambda0(p: int, r: int) -> BoundQuiver:
    """``Lambda0(p, r)``.

    For ``r >= 0``: the cycle ``alpha_p ... alpha_1`` closed by the parallel
    pair ``beta``, ``gamma``, bound by ``alpha_p beta``, ``gamma alpha_1`` and
    ``alpha_i alpha_{i+1}`` for ``1 <= i <= r``.

    For ``r == -1``: the chain ``alpha_{p-1} ... alpha_1`` parallel to
    ``beta``, fed by the parallel pair ``gamma``, ``delta``, bound by
    ``alpha_{p-1} gamma`` and ``beta delta``.  Here ``p`` is the displayed
    total, so both shapes have ``p + 1`` vertices (``p >= 2``).
    """
    if p < 1 or not -1 <= r <= p - 1 or (p, r) == (1, -1):
        raise InputError(f"lambda0 needs p >= 1, -1 <= r <= p - 1, (p, r) != (1, -1); got ({p}, {r})")
    fresh = _Numbering()
    if r >= 0:
        u, v = "u", "v"
        arrows = _chain("alpha", p, u, v, fresh)
        arrows += [("beta", v, u), ("gamma", v, u)]
        rels = [f"alpha{p} beta", "gamma alpha1"] + [f"alpha{i} alpha{i + 1}" for i in range(1, r + 1)]
    else:
        z, w, u = "z", "w", "u"
        arrows = [("delta", z, w), ("gamma", z, w)]
        arrows += _chain("alpha", p - 1, w, u, fresh)
        arrows += [("beta", w, u)]
        rels = [f"alpha{p - 1} gamma", "beta delta"]
    return _assemble(arrows, rels)


def lambda1(p1: int, p2: int, p3: int, p4: int, r1: int) -> BoundQuiver:
    """``Lambda1(p1, p2, p3, p4, r1)``: the ``alpha``/``beta`` cycle through
    the vertices ``L`` and ``R`` with the ``delta`` chain ``L -> C`` and the
    ``gamma`` chain ``R -> C`` meeting at ``C``."""
    if (p1 < 1 or p2 < 1 or p3 < 0 or p4 < 0 or not 0 <= r1 <= p1 - 1
            or p2 + p3 < 2 or p4 + r1 < 1):
        raise InputError(
            f"lambda1 parameters out of range: {(p1, p2, p3, p4, r1)} "
            "(need p1, p2 >= 1, p3, p4 >= 0, 0 <= r1 < p1, p2 + p3 >= 2, p4 + r1 >= 1)"
        )
    fresh = _Numbering()
    left, right = "L", "R"
    if p3 == 0 and p4 == 0:
        right = left
    center = left if p4 == 0 else right if p3 == 0 else "C"
    arrows = _chain("alpha", p1, left, right, fresh)
    arrows += _chain("beta", p2, right, left, fresh)
    arrows += _chain("gamma", p3, right, center, fresh)
    arrows += _chain("delta", p4, left, center, fresh)
    rels = [f"alpha{i} alpha{i + 1}" for i in range(p1 - r1, p1)]
    rels += [f"alpha{p1} beta1", f"beta{p2} alpha1"]
    rels += [f"beta{i} beta{i + 1}" for i in range(1, p2)]
    return _assemble(arrows, rels)


def lambda2(p1: int, p2: int, p3: int, r1: int, r2: int) -> BoundQuiver:
    """``Lambda2(p1, p2, p3, r1, r2)``: an ``alpha`` cycle at ``A`` and a
    ``beta`` cycle at ``B`` joined by the ``gamma`` chain ``B -> A``."""
    if (p1 < 1 or p2 < 1 or p3 < 0 or not 0 <= r1 <= p1 - 1 or not 0 <= r2 <= p2 - 1
            or p3 + r1 + r2 < 1):
        raise InputError(
            f"lambda2 parameters out of range: {(p1, p2, p3, r1, r2)} "
            "(need p1, p2 >= 1, p3 >= 0, 0 <= r1 < p1, 0 <= r2 < p2, p3 + r1 + r2 >= 1)"
        )
    fresh = _Numbering()
    a = "A"
    b = a if p3 == 0 else "B"
    arrows = _chain("beta", p2, b, b, fresh)
    arrows += _chain("gamma", p3, b, a, fresh)
    arrows += _chain("alpha", p1, a, a, fresh)
    rels = [f"alpha{i} alpha{i + 1}" for i in range(p1 - r1, p1)] + [f"alpha{p1} alpha1"]
    rels += [f"beta{i} beta{i + 1}" for i in range(p2 - r2, p2)] + [f"beta{p2} beta1"]
    return _assemble(arrows, rels)


FAMILIES = {"lambda0": lambda0, "lambda1": lambda1, "lambda2": lambda2}


def family_parameters(family, max_vertices):
    """Parameter tuples of all members with at most ``max_vertices``
    vertices, in lexicographic order."""
    n = max_vertices
    if family == "lambda0":
        for p in range(1, n):
            for r in range(-1, p):
                if (p, r) != (1, -1):
                    yield (p, r)
    elif family == "lambda1":
        # vertex count is p1 + p2 + p3 + p4 - 1
        for p1 in range(1, n + 1):
            for p2 in range(1, n + 2 - p1):
                for p3 in range(0, n + 2 - p1 - p2):
                    for p4 in range(0, n + 2 - p1 - p2 - p3):
                        for r1 in range(p1):
                            if p2 + p3 >= 2 and p4 + r1 >= 1:
                                yield (p1, p2, p3, p4, r1)
    elif family == "lambda2":
        # vertex count is p1 + p2 + p3 - 1
        for p1 in range(1, n + 1):
            for p2 in range(1, n + 2 - p1):
                for p3 in range(0, n + 2 - p1 - p2):
                    for r1 in range(p1):
                        for r2 in range(p2):
                            if p3 + r1 + r2 >= 1:
                                yield (p1, p2, p3, r1, r2)
    else:
        raise InputError(f"unknown family {family!r}")


def family_members(family, max_vertices):
    for params in family_parameters(family, max_vertices):
        yield params, FAMILIES[family](*params)
