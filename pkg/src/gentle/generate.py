"""Random gentle bound quivers for property tests.

Randomness comes from :class:`random.Random`, i.e. the Mersenne Twister
MT19937 seeded with an integer, whose output sequence is fixed across
platforms and Python versions.  The same ``(seed, size)`` therefore always
yields the same quiver.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from gentle.admissible import RelationAutomaton
from gentle.core import BoundQuiver
from gentle.errors import GeneratorError, InputError


def _gentle_locally(arrows, rels):
    out, into = {}, {}
    for a, (s, t) in arrows.items():
        out.setdefault(s, []).append(a)
        into.setdefault(t, []).append(a)
    if any(len(v) > 2 for v in out.values()) or any(len(v) > 2 for v in into.values()):
        return False
    for a, (s, t) in arrows.items():
        after = out.get(t, ())
        bound = sum((b, a) in rels for b in after)
        if bound > 1 or len(after) - bound > 1:
            return False
        before = into.get(s, ())
        bound = sum((a, c) in rels for c in before)
        if bound > 1 or len(before) - bound > 1:
            return False
    return True


def _candidate_relations(arrows, new):
    s, t = arrows[new]
    cands = {(b, new) for b, (bs, _) in arrows.items() if bs == t}
    cands |= {(new, c) for c, (_, ct) in arrows.items() if ct == s}
    return sorted(cands)


def _grow(rng, size, attempts):
    vertices = ["v0"]
    arrows = {}
    rels = set()
    for k in range(size):
        name = f"a{k}"
        for _ in range(attempts):
            fresh = f"v{len(vertices)}"
            pool = vertices + [fresh]
            s, t = rng.choice(pool), rng.choice(pool)
            if s == fresh and t == fresh:
                continue
            trial = dict(arrows)
            trial[name] = (s, t)
            cands = _candidate_relations(trial, name)
            options = []
            for n in range(len(cands) + 1):
                for subset in itertools.combinations(cands, n):
                    new_rels = rels | set(subset)
                    if _gentle_locally(trial, new_rels):
                        options.append(new_rels)
            options = [o for o in options if RelationAutomaton(trial, o).is_acyclic()]
            if not options:
                continue
            arrows = trial
            rels = rng.choice(options)
            if fresh in (s, t):
                vertices.append(fresh)
            break
        else:
            return None
    return BoundQuiver.build(vertices, [(a, s, t) for a, (s, t) in arrows.items()], sorted(rels))


def random_gentle(seed: int, size: int, attempts: int = 50, restarts: int = 20) -> BoundQuiver:
    """A connected gentle bound quiver with ``size`` arrows.

    Arrows are inserted one at a time; each insertion picks endpoints and a
    set of new length-2 relations keeping every intermediate quiver gentle
    and admissible.
    """
    if size < 1:
        raise InputError("size must be at least 1")
    rng = random.Random(seed)
    for _ in range(restarts):
        bq = _grow(rng, size, attempts)
        if bq is not None:
            if not bq.is_gentle:
                raise GeneratorError(f"seed {seed}: generated quiver is not gentle")
            return bq
    raise GeneratorError(f"seed {seed}, size {size}: no gentle quiver after {restarts} restarts")


@lru_cache(maxsize=None)
def corpus(count: int = 1000, min_size: int = 2, max_size: int = 10):
    """The standard test corpus: seed ``i`` with ``min_size + i % span`` arrows."""
    span = max_size - min_size + 1
    return tuple(random_gentle(i, min_size + i % span) for i in range(count))
