"""Quivers, paths and monomial bound quivers.

Composition order
-----------------
Paths are stored exactly as they are written in composition order: the
path ``a1 a2 ... al`` satisfies ``s(a_i) == t(a_{i+1})``.  The leftmost
arrow ``a1`` is applied *last*, so walking the path along the arrows means
reading the tuple from right to left::

    s(al) --al--> ... --a2--> t(a2) = s(a1) --a1--> t(a1)

``a1`` is the terminating arrow and ``al`` the starting arrow.  A relation
``alpha beta`` forbids "first ``beta``, then ``alpha``".

All objects are immutable and every set-valued result is returned sorted by
name so that output is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from gentle.admissible import RelationAutomaton, is_admissible
from gentle.errors import (
    CompositionError,
    InputError,
    UnsupportedInputError,
)

__all__ = [
    "Path",
    "Quiver",
    "BoundQuiver",
    "compose",
    "contains_relation_subpath",
    "is_antipath",
    "is_admissible",
    "is_gentle",
    "cycle_excess",
    "enumerate_paths",
    "maximal_paths",
    "maximal_antipaths",
]


@dataclass(frozen=True, order=True)
class Path:
    """A trivial path ``1_x`` (``arrows == ()``) or a composable arrow word."""

    arrows: tuple[str, ...]
    source: str
    target: str

    @classmethod
    def trivial(cls, vertex):
        return cls((), vertex, vertex)

    @property
    def length(self):
        return len(self.arrows)

    @property
    def is_trivial(self):
        return not self.arrows

    @property
    def terminating_arrow(self):
        return self.arrows[0] if self.arrows else None

    @property
    def starting_arrow(self):
        return self.arrows[-1] if self.arrows else None

    def __str__(self):
        return " ".join(self.arrows) if self.arrows else f"1_{self.source}"


@dataclass(frozen=True)
class Quiver:
    """Finite quiver; ``arrows`` maps each arrow name to ``(source, target)``.

    Loops and parallel arrows are allowed.  Vertices must not be isolated.
    """

    vertices: tuple[str, ...]
    arrows: dict = field(hash=False)

    def __init__(self, vertices: Iterable[str], arrows):
        vertices = list(vertices)
        if len(set(vertices)) != len(vertices):
            raise InputError("duplicate vertex name")
        if isinstance(arrows, dict):
            items = [(name, st[0], st[1]) for name, st in arrows.items()]
        else:
            items = [tuple(a) for a in arrows]
        table = {}
        vset = set(vertices)
        for name, source, target in items:
            if name in table:
                raise InputError(f"duplicate arrow name {name!r}")
            for v in (source, target):
                if v not in vset:
                    raise InputError(f"arrow {name!r} uses undeclared vertex {v!r}")
            table[name] = (source, target)
        touched = {v for st in table.values() for v in st}
        isolated = sorted(vset - touched)
        if isolated:
            raise InputError(f"isolated vertex {isolated[0]!r}")
        object.__setattr__(self, "vertices", tuple(sorted(vertices)))
        object.__setattr__(self, "arrows", {n: table[n] for n in sorted(table)})

    def __hash__(self):
        return hash((self.vertices, tuple(self.arrows.items())))

    def source(self, arrow):
        return self.arrows[arrow][0]

    def target(self, arrow):
        return self.arrows[arrow][1]

    @cached_property
    def _incidence(self):
        out = {v: [] for v in self.vertices}
        into = {v: [] for v in self.vertices}
        for name, (s, t) in self.arrows.items():
            out[s].append(name)
            into[t].append(name)
        return ({v: tuple(a) for v, a in out.items()}, {v: tuple(a) for v, a in into.items()})

    def out_arrows(self, vertex):
        return self._incidence[0][vertex]

    def in_arrows(self, vertex):
        return self._incidence[1][vertex]

    def path(self, *arrows: str) -> Path:
        """Build the path ``arrows[0] arrows[1] ...`` (composition order)."""
        if not arrows:
            raise InputError("use Quiver.trivial for paths of length 0")
        for a in arrows:
            if a not in self.arrows:
                raise InputError(f"unknown arrow {a!r}")
        for left, right in zip(arrows, arrows[1:]):
            if self.source(left) != self.target(right):
                raise CompositionError(
                    f"s({left}) = {self.source(left)} but t({right}) = {self.target(right)}"
                )
        return Path(tuple(arrows), self.source(arrows[-1]), self.target(arrows[0]))

    def trivial(self, vertex) -> Path:
        if vertex not in self._incidence[0]:
            raise InputError(f"unknown vertex {vertex!r}")
        return Path.trivial(vertex)

    def check_path(self, path: Path):
        """Raise :class:`InputError` unless ``path`` is a path of this quiver."""
        if path.is_trivial:
            if path.source not in self._incidence[0] or path.source != path.target:
                raise InputError(f"{path} is not a trivial path of the quiver")
            return
        try:
            rebuilt = self.path(*path.arrows)
        except InputError as exc:
            raise InputError(f"{path} is not a path of the quiver: {exc}") from None
        if rebuilt != path:
            raise InputError(f"{path} has wrong endpoints")

    def is_connected(self):
        if not self.vertices:
            return False
        adj = {v: set() for v in self.vertices}
        for s, t in self.arrows.values():
            adj[s].add(t)
            adj[t].add(s)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)


@dataclass(frozen=True)
class BoundQuiver:
    """A finite quiver with an admissible set of monomial relations."""

    quiver: Quiver
    relations: frozenset

    def __init__(self, quiver: Quiver, relations=(), check_admissible=True):
        rels = []
        for rel in relations:
            if not isinstance(rel, Path):
                rel = quiver.path(*rel)
            else:
                quiver.check_path(rel)
            if rel.length < 2:
                raise InputError(f"relation {rel} has length < 2")
            rels.append(rel)
        object.__setattr__(self, "quiver", quiver)
        object.__setattr__(self, "relations", frozenset(rels))
        if check_admissible and not self.automaton.is_acyclic():
            raise InputError("relations are not admissible: some relation-free cycle exists")

    @classmethod
    def build(cls, vertices, arrows, relations=()):
        """Convenience constructor; relations are sequences of arrow names."""
        return cls(Quiver(vertices, arrows), [tuple(r) for r in relations])

    def __hash__(self):
        return hash((self.quiver, self.relations))

    def __eq__(self, other):
        if not isinstance(other, BoundQuiver):
            return NotImplemented
        return self.quiver == other.quiver and self.relations == other.relations

    def __repr__(self):
        return (
            f"BoundQuiver(vertices={list(self.quiver.vertices)}, "
            f"arrows={self.quiver.arrows}, relations={self.sorted_relations()})"
        )

    @property
    def vertices(self):
        return self.quiver.vertices

    @property
    def arrows(self):
        return self.quiver.arrows

    def sorted_relations(self):
        return [" ".join(r.arrows) for r in sorted(self.relations)]

    @cached_property
    def relation_words(self) -> frozenset:
        return frozenset(r.arrows for r in self.relations)

    @cached_property
    def automaton(self) -> RelationAutomaton:
        return RelationAutomaton(self.quiver.arrows, self.relations)

    @cached_property
    def is_gentle(self) -> bool:
        return is_gentle(self)

    def path(self, *arrows):
        return self.quiver.path(*arrows)

    def trivial(self, vertex):
        return self.quiver.trivial(vertex)

    # Local neighbourhoods of an arrow ``a``.  "Left" means composing on the
    # left (b a, walked after a); "right" means a c (walked before a).
    def left_free(self, a):
        return tuple(b for b in self.quiver.out_arrows(self.quiver.target(a))
                     if (b, a) not in self.relation_words)

    def right_free(self, a):
        return tuple(c for c in self.quiver.in_arrows(self.quiver.source(a))
                     if (a, c) not in self.relation_words)

    def left_bound(self, a):
        return tuple(b for b in self.quiver.out_arrows(self.quiver.target(a))
                     if (b, a) in self.relation_words)

    def right_bound(self, a):
        return tuple(c for c in self.quiver.in_arrows(self.quiver.source(a))
                     if (a, c) in self.relation_words)


def compose(p1: Path, p2: Path) -> Path:
    """The composition ``p1 p2`` (walk ``p2`` first); requires ``s(p1) == t(p2)``."""
    if p1.source != p2.target:
        raise CompositionError(f"cannot compose {p1} with {p2}: s = {p1.source}, t = {p2.target}")
    return Path(p1.arrows + p2.arrows, p2.source, p1.target)


def contains_relation_subpath(bq: BoundQuiver, path: Path) -> bool:
    bq.quiver.check_path(path)
    word = path.arrows
    for rel in bq.relation_words:
        k = len(rel)
        if any(word[i:i + k] == rel for i in range(len(word) - k + 1)):
            return True
    return False


def _require_gentle(bq, what):
    if not bq.is_gentle:
        raise UnsupportedInputError(f"{what} requires a gentle bound quiver")


def is_antipath(bq: BoundQuiver, path: Path) -> bool:
    """Every consecutive pair of arrows of ``path`` is a relation."""
    _require_gentle(bq, "is_antipath")
    bq.quiver.check_path(path)
    if path.is_trivial:
        raise InputError("antipaths have positive length")
    return all(pair in bq.relation_words for pair in zip(path.arrows, path.arrows[1:]))


def is_gentle(bq: BoundQuiver) -> bool:
    """Connectedness plus the four local gentleness conditions."""
    q = bq.quiver
    if not q.is_connected():
        return False
    if any(r.length != 2 for r in bq.relations):
        return False
    for v in q.vertices:
        if len(q.out_arrows(v)) > 2 or len(q.in_arrows(v)) > 2:
            return False
    for a in q.arrows:
        if len(bq.left_free(a)) > 1 or len(bq.right_free(a)) > 1:
            return False
        if len(bq.left_bound(a)) > 1 or len(bq.right_bound(a)) > 1:
            return False
    return True


def cycle_excess(bq: BoundQuiver) -> int:
    """``|arrows| - |vertices|``; gentle two-cycle quivers have excess 1."""
    return len(bq.quiver.arrows) - len(bq.quiver.vertices)


def is_two_cycle(bq: BoundQuiver) -> bool:
    return bq.is_gentle and cycle_excess(bq) == 1


def enumerate_paths(bq: BoundQuiver, max_len: int) -> list[Path]:
    """All relation-free paths of length ``<= max_len``, trivial ones included."""
    if max_len < 0:
        raise InputError("max_len must be non-negative")
    q = bq.quiver
    found = [Path.trivial(v) for v in q.vertices]
    layer = [q.path(a) for a in q.arrows] if max_len >= 1 else []
    rel_lengths = sorted({len(r) for r in bq.relation_words})
    while layer:
        found.extend(layer)
        if layer[0].length >= max_len:
            break
        nxt = []
        for p in layer:
            for c in q.in_arrows(p.source):
                word = p.arrows + (c,)
                if any(word[-k:] in bq.relation_words for k in rel_lengths if k <= len(word)):
                    continue
                nxt.append(Path(word, q.source(c), p.target))
        layer = nxt
    return sorted(found)


def _is_maximal_path(bq, path):
    q = bq.quiver
    for b in q.out_arrows(path.target):
        if not contains_relation_subpath(bq, Path((b,) + path.arrows, path.source, q.target(b))):
            return False
    for c in q.in_arrows(path.source):
        if not contains_relation_subpath(bq, Path(path.arrows + (c,), q.source(c), path.target)):
            return False
    return True


def _walk(bq, arrow, left_step, right_step):
    """Grow ``arrow`` to the unique inextensible word under the given one-step
    extension rules.  Returns ``None`` when the growth never stops."""
    limit = len(bq.quiver.arrows)
    word = [arrow]
    seen = {arrow}
    for step, at_left in ((left_step, True), (right_step, False)):
        while True:
            end = word[0] if at_left else word[-1]
            nxt = step(end)
            if len(nxt) > 1:
                raise UnsupportedInputError("extension is not unique; quiver is not gentle")
            if not nxt:
                break
            if nxt[0] in seen or len(word) > limit:
                return None
            seen.add(nxt[0])
            if at_left:
                word.insert(0, nxt[0])
            else:
                word.append(nxt[0])
    return tuple(word)


def maximal_paths(bq: BoundQuiver) -> list[Path]:
    """Relation-free paths that are not a subpath of a longer one.

    Gentle quivers use unique one-arrow extension; anything else falls back
    to exhaustive enumeration up to the exact longest relation-free length.
    """
    q = bq.quiver
    if bq.is_gentle:
        words = set()
        for a in q.arrows:
            word = _walk(bq, a, bq.left_free, bq.right_free)
            if word is None:
                raise UnsupportedInputError("relation-free cycle: quiver is not admissible")
            words.add(word)
        return sorted(q.path(*w) for w in words)
    bound = bq.automaton.longest_word()
    if bound is None:
        raise UnsupportedInputError("relation-free cycle: quiver is not admissible")
    return [p for p in enumerate_paths(bq, bound) if p.length and _is_maximal_path(bq, p)]


def maximal_antipaths(bq: BoundQuiver) -> list[Path]:
    """Antipaths admitting no one-arrow extension.

    Arrows lying on a cycle of relations are skipped: every antipath through
    them extends forever, so they sit in no maximal antipath.
    """
    _require_gentle(bq, "maximal_antipaths")
    words = set()
    for a in bq.quiver.arrows:
        word = _walk(bq, a, bq.left_bound, bq.right_bound)
        if word is not None:
            words.add(word)
    return sorted(bq.quiver.path(*w) for w in words)
