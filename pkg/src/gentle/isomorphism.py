"""Bound-quiver isomorphism by signature-pruned backtracking."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from gentle.core import BoundQuiver


@dataclass(frozen=True)
class Isomorphism:
    """Vertex and arrow bijections, stored as sorted ``(domain, image)`` pairs."""

    vertices: tuple[tuple[str, str], ...]
    arrows: tuple[tuple[str, str], ...]

    @property
    def vertex_map(self):
        return dict(self.vertices)

    @property
    def arrow_map(self):
        return dict(self.arrows)

    def apply(self, bq: BoundQuiver) -> BoundQuiver:
        """Rename ``bq`` along this isomorphism."""
        vmap, amap = self.vertex_map, self.arrow_map
        arrows = [(amap[a], vmap[s], vmap[t]) for a, (s, t) in bq.quiver.arrows.items()]
        rels = [tuple(amap[a] for a in r.arrows) for r in bq.relations]
        return BoundQuiver.build([vmap[v] for v in bq.vertices], arrows, rels)

    def to_json(self):
        return {"vertices": self.vertex_map, "arrows": self.arrow_map}


def is_isomorphism(iso: Isomorphism, bq1: BoundQuiver, bq2: BoundQuiver) -> bool:
    vmap, amap = iso.vertex_map, iso.arrow_map
    if sorted(vmap) != list(bq1.vertices) or sorted(vmap.values()) != list(bq2.vertices):
        return False
    if sorted(amap) != list(bq1.arrows) or sorted(amap.values()) != list(bq2.arrows):
        return False
    for a, (s, t) in bq1.arrows.items():
        if bq2.arrows[amap[a]] != (vmap[s], vmap[t]):
            return False
    image = {tuple(amap[a] for a in r) for r in bq1.relation_words}
    return image == set(bq2.relation_words)


def _vertex_signatures(bq):
    q = bq.quiver
    sig = {}
    for v in q.vertices:
        loops = sum(1 for a in q.out_arrows(v) if q.target(a) == v)
        inner = ends = starts = 0
        for r in bq.relations:
            walk = [q.source(a) for a in r.arrows]  # interior vertices are sources of a1..a_{l-1}
            inner += walk[:-1].count(v)
            starts += r.source == v
            ends += r.target == v
        sig[v] = (len(q.in_arrows(v)), len(q.out_arrows(v)), loops, inner, starts, ends)
    return sig


def _arrow_signatures(bq):
    sig = {a: Counter() for a in bq.arrows}
    for r in bq.relation_words:
        for pos, a in enumerate(r):
            sig[a][(len(r), pos)] += 1
    return {a: tuple(sorted(c.items())) for a, c in sig.items()}


def _edge_counts(bq):
    return Counter(bq.arrows.values())


def are_isomorphic(bq1: BoundQuiver, bq2: BoundQuiver) -> Isomorphism | None:
    """The lexicographically least isomorphism ``bq1 -> bq2``, or ``None``.

    Vertices of ``bq1`` are assigned in sorted order, each to the
    alphabetically first compatible vertex of ``bq2``; arrows likewise once
    the vertex map is complete.
    """
    if (len(bq1.vertices), len(bq1.arrows), len(bq1.relations)) != (
        len(bq2.vertices), len(bq2.arrows), len(bq2.relations)
    ):
        return None
    vs1, vs2 = _vertex_signatures(bq1), _vertex_signatures(bq2)
    if Counter(vs1.values()) != Counter(vs2.values()):
        return None
    as1, as2 = _arrow_signatures(bq1), _arrow_signatures(bq2)
    if Counter(as1.values()) != Counter(as2.values()):
        return None

    e1, e2 = _edge_counts(bq1), _edge_counts(bq2)
    dom = list(bq1.vertices)
    cands = {v: [w for w in bq2.vertices if vs2[w] == vs1[v]] for v in dom}
    vmap = {}
    used = set()

    def consistent(v, w):
        for u, fu in vmap.items():
            if e1[(u, v)] != e2[(fu, w)] or e1[(v, u)] != e2[(w, fu)]:
                return False
        return e1[(v, v)] == e2[(w, w)]

    def assign_vertices(i):
        if i == len(dom):
            amap = _match_arrows(bq1, bq2, vmap, as1, as2)
            if amap is None:
                return None
            return Isomorphism(tuple(sorted(vmap.items())), tuple(sorted(amap.items())))
        v = dom[i]
        for w in cands[v]:
            if w in used or not consistent(v, w):
                continue
            vmap[v] = w
            used.add(w)
            found = assign_vertices(i + 1)
            if found is not None:
                return found
            del vmap[v]
            used.discard(w)
        return None

    return assign_vertices(0)


def _match_arrows(bq1, bq2, vmap, as1, as2):
    arrows1 = list(bq1.arrows)
    order = {a: i for i, a in enumerate(arrows1)}
    rels2 = set(bq2.relation_words)
    # relations checkable once their last (in sorted order) arrow is assigned
    ready = {}
    for r in bq1.relation_words:
        ready.setdefault(max(order[a] for a in r), []).append(r)
    by_ends = {}
    for b, st in bq2.arrows.items():
        by_ends.setdefault(st, []).append(b)
    amap = {}
    used = set()

    def assign(i):
        if i == len(arrows1):
            return True
        a = arrows1[i]
        s, t = bq1.arrows[a]
        for b in by_ends.get((vmap[s], vmap[t]), ()):
            if b in used or as2[b] != as1[a]:
                continue
            amap[a] = b
            used.add(b)
            if all(tuple(amap[x] for x in r) in rels2 for r in ready.get(i, ())):
                if assign(i + 1):
                    return True
            del amap[a]
            used.discard(b)
        return False

    return dict(amap) if assign(0) else None
