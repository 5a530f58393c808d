"""Representations and string modules ``M(sigma)``.

Basis convention for ``M(sigma)`` with ``sigma = a1 ... al``: one basis
vector per position of the walk, numbered from the source end::

    position:   0        1              l-1        l
              s(al) --al--> . -- ... --> . --a1--> t(a1)

Arrow ``a_i`` sends position ``l - i`` to ``l - i + 1``.  The basis of the
space at a vertex ``v`` consists of the positions sitting at ``v``, in
increasing order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from gentle.core import BoundQuiver, Path, contains_relation_subpath
from gentle.errors import InputError, InternalInvariantError


@dataclass(frozen=True, eq=False)
class Representation:
    """Dimension per vertex and a ``dim t(a) x dim s(a)`` 0/1 matrix per arrow."""

    quiver: object
    dims: dict
    maps: dict

    def __post_init__(self):
        for a, (s, t) in self.quiver.arrows.items():
            if self.maps[a].shape != (self.dims[t], self.dims[s]):
                raise InternalInvariantError(f"matrix of {a} has shape {self.maps[a].shape}")

    def total_dimension(self):
        return sum(self.dims.values())

    def satisfies_relations(self, relations):
        return all(not evaluate_path(self, r).any() for r in relations)


def string_module(bq: BoundQuiver, sigma: Path) -> Representation:
    if contains_relation_subpath(bq, sigma):
        raise InputError(f"{sigma} contains a relation")
    q = bq.quiver
    l = sigma.length
    walk = [sigma.source] + [q.target(a) for a in reversed(sigma.arrows)]
    slot = []  # position -> index inside the space at walk[position]
    counts = {v: 0 for v in q.vertices}
    for v in walk:
        slot.append(counts[v])
        counts[v] += 1
    maps = {a: np.zeros((counts[t], counts[s]), dtype=np.int64) for a, (s, t) in q.arrows.items()}
    for i, a in enumerate(sigma.arrows, start=1):
        pos = l - i
        maps[a][slot[pos + 1], slot[pos]] = 1
    rep = Representation(q, counts, maps)
    if not rep.satisfies_relations(bq.relations):
        raise InternalInvariantError(f"M({sigma}) does not vanish on the relations")
    return rep


def evaluate_path(rep: Representation, sigma: Path) -> np.ndarray:
    """The composite ``V_{a1} ... V_{al}`` (identity on a trivial path)."""
    result = np.eye(rep.dims[sigma.source], dtype=np.int64)
    for a in reversed(sigma.arrows):
        m = rep.maps[a]
        if m.shape[1] != result.shape[0]:
            raise InternalInvariantError(f"cannot apply {a}: shape {m.shape} after {result.shape}")
        result = m @ result
    return result
