"""Permitted and forbidden threads and the thread-orbit derived invariant.

For a gentle bound quiver the invariant is a finitely supported function
``phi: N x N -> N``.  It counts orbits of the permutation
``Phi = Phi1 . Phi2`` on forbidden threads (statistics: number of threads,
total length) together with orbits of the relation successor ``Phi'`` on
arrows lying on cycles of relations (statistics: ``0``, orbit size).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from gentle.core import BoundQuiver, Path, _require_gentle, maximal_antipaths, maximal_paths
from gentle.errors import GentlenessViolation, InputError

PERMITTED = "permitted"
FORBIDDEN = "forbidden"


@dataclass(frozen=True, order=True)
class Thread:
    path: Path
    kind: str

    @property
    def length(self):
        return self.path.length

    def __str__(self):
        return str(self.path)


@dataclass(frozen=True)
class DerivedInvariant:
    """Sparse ``(n, m) -> count`` table, sorted by ``(n, m)``; counts are positive."""

    entries: tuple[tuple[tuple[int, int], int], ...] = ()

    @classmethod
    def from_counts(cls, counts):
        return cls(tuple(sorted((tuple(k), int(c)) for k, c in dict(counts).items() if c > 0)))

    @classmethod
    def from_triples(cls, triples):
        return cls.from_counts({(n, m): c for n, m, c in triples})

    def __getitem__(self, key):
        return dict(self.entries).get(tuple(key), 0)

    def norm(self):
        return sum(c for _, c in self.entries)

    def triples(self):
        return [[n, m, c] for (n, m), c in self.entries]

    def __str__(self):
        return "{" + ", ".join(f"({n},{m}): {c}" for (n, m), c in self.entries) + "}"


def _trivial_threads(bq, bound):
    q = bq.quiver
    found = []
    for x in q.vertices:
        out, into = q.out_arrows(x), q.in_arrows(x)
        if len(out) > 1 or len(into) > 1:
            continue
        if out and into and ((out[0], into[0]) in bq.relation_words) != bound:
            continue
        found.append(Path.trivial(x))
    return found


def permitted_threads(bq: BoundQuiver) -> list[Thread]:
    _require_gentle(bq, "permitted_threads")
    paths = maximal_paths(bq) + _trivial_threads(bq, bound=False)
    return sorted(Thread(p, PERMITTED) for p in paths)


def forbidden_threads(bq: BoundQuiver) -> list[Thread]:
    _require_gentle(bq, "forbidden_threads")
    paths = maximal_antipaths(bq) + _trivial_threads(bq, bound=True)
    return sorted(Thread(p, FORBIDDEN) for p in paths)


def _unique(candidates, what):
    if len(candidates) != 1:
        raise GentlenessViolation(f"{what}: expected one candidate, found {len(candidates)}")
    return candidates[0]


class _ThreadMaps:
    """Both thread sets and the two bijections, computed once."""

    def __init__(self, bq):
        _require_gentle(bq, "thread computation")
        self.bq = bq
        self.permitted = permitted_threads(bq)
        self.forbidden = forbidden_threads(bq)
        self._pset = set(self.permitted)
        self._fset = set(self.forbidden)

    def phi1(self, sigma):
        if sigma not in self._pset:
            raise InputError(f"{sigma} is not a permitted thread")
        q = self.bq.quiver
        p = sigma.path
        if p.is_trivial:
            into = q.in_arrows(p.target)
            if not into:
                return Thread(p, FORBIDDEN)
            cands = [w for w in self.forbidden if w.path.terminating_arrow == into[0]]
            return _unique(cands, f"Phi1({p})")
        cands = [
            w for w in self.forbidden
            if w.path.target == p.target
            and (w.path.is_trivial or w.path.terminating_arrow != p.terminating_arrow)
        ]
        return _unique(cands, f"Phi1({p})")

    def phi2(self, omega):
        if omega not in self._fset:
            raise InputError(f"{omega} is not a forbidden thread")
        q = self.bq.quiver
        w = omega.path
        if w.is_trivial:
            out = q.out_arrows(w.source)
            if not out:
                return Thread(w, PERMITTED)
            cands = [s for s in self.permitted if s.path.starting_arrow == out[0]]
            return _unique(cands, f"Phi2({w})")
        cands = [
            s for s in self.permitted
            if s.path.source == w.source
            and (s.path.is_trivial or s.path.starting_arrow != w.starting_arrow)
        ]
        return _unique(cands, f"Phi2({w})")

    def phi(self, omega):
        return self.phi1(self.phi2(omega))


def phi1(bq: BoundQuiver, sigma: Thread | Path) -> Thread:
    """Map a permitted thread to its forbidden partner."""
    if isinstance(sigma, Path):
        sigma = Thread(sigma, PERMITTED)
    return _ThreadMaps(bq).phi1(sigma)


def phi2(bq: BoundQuiver, omega: Thread | Path) -> Thread:
    """Map a forbidden thread to its permitted partner."""
    if isinstance(omega, Path):
        omega = Thread(omega, FORBIDDEN)
    return _ThreadMaps(bq).phi2(omega)


def critical_arrows(bq: BoundQuiver) -> list[str]:
    """Arrows contained in no maximal antipath (they lie on relation cycles)."""
    _require_gentle(bq, "critical_arrows")
    covered = {a for w in maximal_antipaths(bq) for a in w.arrows}
    return [a for a in bq.quiver.arrows if a not in covered]


def _relation_successor(bq, arrow, allowed):
    cands = [c for c in bq.right_bound(arrow) if c in allowed]
    return _unique(cands, f"Phi'({arrow})")


def phi_prime(bq: BoundQuiver, arrow: str) -> str:
    """The unique critical ``a'`` with ``arrow a'`` a relation."""
    crit = critical_arrows(bq)
    if arrow not in crit:
        raise InputError(f"{arrow!r} is not a critical arrow")
    return _relation_successor(bq, arrow, set(crit))


def _orbits(elements, step):
    seen = set()
    orbits = []
    for start in sorted(elements):
        if start in seen:
            continue
        orbit = [start]
        seen.add(start)
        cur = step(start)
        while cur != start:
            if cur in seen:
                raise GentlenessViolation(f"map is not a permutation near {cur}")
            orbit.append(cur)
            seen.add(cur)
            cur = step(cur)
        orbits.append(orbit)
    return orbits


def thread_orbits(bq: BoundQuiver):
    """``(Phi-orbits of forbidden threads, Phi'-orbits of critical arrows)``,
    each orbit starting at its least element and listed in that order."""
    maps = _ThreadMaps(bq)
    crit = critical_arrows(bq)
    allowed = set(crit)
    return (
        _orbits(maps.forbidden, maps.phi),
        _orbits(crit, lambda a: _relation_successor(bq, a, allowed)),
    )


def derived_invariant(bq: BoundQuiver) -> DerivedInvariant:
    phi_orbits, prime_orbits = thread_orbits(bq)
    counts = Counter()
    for orbit in phi_orbits:
        counts[(len(orbit), sum(t.length for t in orbit))] += 1
    for orbit in prime_orbits:
        counts[(0, len(orbit))] += 1
    return DerivedInvariant.from_counts(counts)


def norm(phi: DerivedInvariant) -> int:
    return phi.norm()


def finite_gldim_proxy(bq: BoundQuiver) -> bool:
    """Finite global dimension, via the equivalent criterion that no arrow
    lies on a cycle of relations."""
    return not critical_arrows(bq)
