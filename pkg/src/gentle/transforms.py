"""Transformations of gentle bound quivers that preserve the derived category:
generalized APR reflections, relation shifts on the ``Lambda0`` cycle and
one-point coextensions by maximal paths, plus a replay of the extension
argument ``[sigma] Lambda0(p, r) ~ Lambda0(p + 1, r)``.

Coextension note: the new arrow *leaves* ``t(sigma)`` and ends at a new
sink vertex.
"""

from __future__ import annotations

import itertools
import logging

from gentle.core import BoundQuiver, Path, Quiver, _require_gentle, maximal_paths
from gentle.errors import (
    GentlenessViolation,
    InputError,
    InternalInvariantError,
    NotApplicableError,
)
from gentle.families import lambda0
from gentle.isomorphism import Isomorphism, is_isomorphism

log = logging.getLogger(__name__)

RESERVED_PREFIX = "_"


def _companion(bq, arrow, x):
    """``beta_alpha``: the unique arrow into ``x`` with ``arrow beta`` not a relation."""
    cands = [b for b in bq.quiver.in_arrows(x) if (arrow, b) not in bq.relation_words]
    if len(cands) > 1:
        raise GentlenessViolation(f"several relation-free predecessors of {arrow!r} at {x!r}")
    return cands[0] if cands else None


def reflection_applicable(bq: BoundQuiver, x: str) -> bool:
    q = bq.quiver
    if x not in q.vertices:
        raise InputError(f"unknown vertex {x!r}")
    if any(q.target(a) == x for a in q.out_arrows(x)):
        return False
    return all(_companion(bq, a, x) is not None for a in q.out_arrows(x))


def reflect(bq: BoundQuiver, x: str) -> BoundQuiver:
    """Apply the generalized APR reflection at ``x``.

    Arrows ending at ``x`` are reversed, arrows leaving ``x`` move their
    source to ``s(beta_alpha)``, and arrows ``alpha`` with a relation
    ``beta alpha`` through ``x`` are redirected into ``x``.
    """
    if not reflection_applicable(bq, x):
        raise NotApplicableError(f"reflection at {x!r} is not defined")
    q = bq.quiver
    rels = bq.relation_words
    companion = {a: _companion(bq, a, x) for a in q.out_arrows(x)}

    arrows = {}
    for a, (s, t) in q.arrows.items():
        if t == x:
            new_s = x
        elif s == x:
            new_s = q.source(companion[a])
        else:
            new_s = s
        if t == x:
            new_t = s
        elif any(q.target(b) == x and q.source(b) == t and (b, a) in rels for b in q.arrows):
            new_t = x
        else:
            new_t = t
        arrows[a] = (new_s, new_t)

    new_rels = set()
    for rel in rels:
        a = rel[0]
        if q.target(a) != x and q.source(a) != x:
            new_rels.add(rel)
    for a, b in companion.items():
        new_rels.add((a, b))
    into = q.in_arrows(x)
    for a in into:
        for g in into:
            if g == a:
                continue
            for rel in rels:
                if len(rel) == 2 and rel[0] == g:
                    new_rels.add((a, rel[1]))

    try:
        result = BoundQuiver(Quiver(q.vertices, arrows), sorted(new_rels))
    except InputError as exc:
        raise InternalInvariantError(f"reflection at {x!r} produced an invalid bound quiver: {exc}") from exc
    if bq.is_gentle and not result.is_gentle:
        raise InternalInvariantError(f"reflection at {x!r} of a gentle quiver is not gentle")
    return result


def _fresh(names, kind):
    for k in itertools.count():
        candidate = f"{RESERVED_PREFIX}{kind}{k}"
        if candidate not in names:
            return candidate


def coextend(bq: BoundQuiver, sigma: Path) -> BoundQuiver:
    """One-point coextension ``[sigma] bq`` by a maximal path ``sigma``.

    Adds a sink ``x`` and an arrow ``t(sigma) -> x`` composing to zero with
    every other arrow into ``t(sigma)``.
    """
    _require_gentle(bq, "coextend")
    if sigma not in maximal_paths(bq):
        raise InputError(f"{sigma} is not a maximal path")
    q = bq.quiver
    x = _fresh(set(q.vertices), "v")
    new = _fresh(set(q.arrows), "a")
    arrows = dict(q.arrows)
    arrows[new] = (sigma.target, x)
    rels = set(bq.relation_words)
    for b in q.in_arrows(sigma.target):
        if b != sigma.terminating_arrow:
            rels.add((new, b))
    result = BoundQuiver(Quiver(q.vertices + (x,), arrows), sorted(rels))
    if not result.is_gentle:
        raise InternalInvariantError("coextension of a gentle quiver is not gentle")
    return result


def lambda0_chain(bq: BoundQuiver):
    """Recognise the ``Lambda0`` cycle shape structurally.

    Returns ``[alpha_1, ..., alpha_p]`` (``alpha_1`` enters the source of the
    parallel pair) together with the pair itself, or raises
    :class:`InputError`.
    """
    q = bq.quiver
    nv, na = len(q.vertices), len(q.arrows)
    by_ends = {}
    for a, st in q.arrows.items():
        by_ends.setdefault(st, []).append(a)
    pairs = [arrs for st, arrs in by_ends.items() if len(arrs) == 2 and st[0] != st[1]]
    if na != nv + 1 or len(pairs) != 1 or any(len(v) > 2 for v in by_ends.values()):
        raise InputError("quiver is not of Lambda0 cycle shape")
    pair = pairs[0]
    head, tail = q.arrows[pair[0]]  # the pair runs head -> tail
    chain = []
    cur = head
    rest = set(q.arrows) - set(pair)
    while cur != tail:
        into = [a for a in q.in_arrows(cur) if a in rest]
        if len(into) != 1:
            raise InputError("quiver is not of Lambda0 cycle shape")
        chain.append(into[0])
        rest.discard(into[0])
        cur = q.source(into[0])
    if rest or len(chain) != nv - 1:
        raise InputError("quiver is not of Lambda0 cycle shape")
    return chain, tuple(pair)


def _same_arrows_iso(bq1, bq2):
    """Isomorphism fixing arrow names, if the vertex correspondence it forces is bijective."""
    vmap = {}
    for a, (s, t) in bq1.arrows.items():
        if a not in bq2.arrows:
            return None
        s2, t2 = bq2.arrows[a]
        for u, w in ((s, s2), (t, t2)):
            if vmap.setdefault(u, w) != w:
                return None
    iso = Isomorphism(tuple(sorted(vmap.items())), tuple((a, a) for a in bq1.arrows))
    return iso if is_isomorphism(iso, bq1, bq2) else None


def shift_relation(bq: BoundQuiver, i: int) -> BoundQuiver:
    """Replace ``alpha_i alpha_{i+1}`` by ``alpha_{i-1} alpha_i`` on the
    ``Lambda0`` chain.

    The result is checked against the reflection at ``t(alpha_i)``, which
    yields the same bound quiver up to swapping two chain vertices.
    """
    _require_gentle(bq, "shift_relation")
    chain, _ = lambda0_chain(bq)
    p = len(chain)
    if not 2 <= i <= p - 1:
        raise InputError(f"shift index must lie in [2, {p - 1}], got {i}")
    prev, cur, nxt = chain[i - 2], chain[i - 1], chain[i]
    rels = set(bq.relation_words)
    if (prev, cur) in rels or (cur, nxt) not in rels:
        raise InputError(f"shift at {i} needs alpha_{i-1} alpha_{i} free and alpha_{i} alpha_{i+1} bound")
    rels.discard((cur, nxt))
    rels.add((prev, cur))
    result = BoundQuiver(bq.quiver, sorted(rels))
    reflected = reflect(bq, bq.quiver.target(cur))
    if _same_arrows_iso(result, reflected) is None:
        raise InternalInvariantError(f"shift at {i} disagrees with the reflection at t(alpha_{i})")
    return result


def lemma_extension_pipeline(p: int, r: int, trace=None) -> BoundQuiver:
    """Coextend ``Lambda0(p, r)``, reflect and shift until the result has the
    shape of ``Lambda0(p + 1, r)``.

    ``trace``, if given, is a list that receives ``(step name, bound quiver)``
    for every intermediate stage.
    """
    if p < 1 or not -1 <= r <= p - 1 or (p, r) == (1, -1):
        raise InputError(f"pipeline needs p >= 1, -1 <= r <= p - 1, (p, r) != (1, -1); got ({p}, {r})")
    steps = trace if trace is not None else []
    base = lambda0(p, r)
    steps.append(("lambda0", base))
    if r >= 0:
        sigma = next(s for s in maximal_paths(base) if s.terminating_arrow == "beta")
    else:
        sigma = base.path("beta", "gamma")
    cur = coextend(base, sigma)
    steps.append((f"coextend {sigma}", cur))
    new_arrow = next(a for a in cur.arrows if a not in base.arrows)
    x = cur.quiver.target(new_arrow)
    cur = reflect(cur, x)
    steps.append((f"reflect {x}", cur))
    if r >= 0:
        cur = reflect(cur, x)
        steps.append((f"reflect {x}", cur))
        for i in range(2, r + 2):
            cur = shift_relation(cur, i)
            steps.append((f"shift {i}", cur))
    log.debug("pipeline(%d, %d) finished after %d steps", p, r, len(steps))
    return cur
