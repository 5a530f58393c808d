"""Exact admissibility test for monomial relations.

A relation set ``R`` on a finite quiver is admissible when, for some ``n``,
every path of length ``n`` contains a member of ``R`` as a contiguous
subpath.  Equivalently there is no infinite composable arrow word avoiding
``R``.  We decide this with a forbidden-subword automaton in the style of
Aho-Corasick: its states are proper prefixes of relations (longest suffix
match), paired with the last arrow read so composability can be enforced.
The relation-free part of the product graph is finite, and ``R`` is
admissible exactly when that graph is acyclic.

Words are read in written (composition) order ``a1 a2 ... al``, so the
arrow following ``a`` must satisfy ``t(next) == s(a)``.
"""

from graphlib import CycleError, TopologicalSorter

from gentle.errors import InputError


def _relation_words(arrows, relations):
    words = []
    for rel in relations:
        word = tuple(getattr(rel, "arrows", rel))
        if len(word) < 2:
            raise InputError(f"relation {' '.join(word) or '<empty>'} has length < 2")
        for name in word:
            if name not in arrows:
                raise InputError(f"relation {' '.join(word)} uses unknown arrow {name!r}")
        for left, right in zip(word, word[1:]):
            if arrows[left][0] != arrows[right][1]:
                raise InputError(
                    f"relation {' '.join(word)} is not composable at {left} {right}"
                )
        words.append(word)
    return words


class RelationAutomaton:
    """Product of the quiver with the relation-matching automaton.

    ``arrows`` maps arrow name to ``(source, target)``.
    """

    def __init__(self, arrows, relations):
        self.arrows = dict(arrows)
        self.words = _relation_words(self.arrows, relations)
        self.relations = frozenset(self.words)
        self.prefixes = {()} | {w[:k] for w in self.words for k in range(len(w))}
        self._step_cache = {}
        self.graph = self._build()

    def step(self, state, arrow):
        """Return the successor match state, or ``None`` if a relation ends here."""
        key = (state, arrow)
        if key in self._step_cache:
            return self._step_cache[key]
        word = state + (arrow,)
        result = None
        if not any(word[i:] in self.relations for i in range(len(word))):
            for i in range(len(word) + 1):
                if word[i:] in self.prefixes:
                    result = word[i:]
                    break
        self._step_cache[key] = result
        return result

    def _build(self):
        into = {}
        for name, (_, target) in self.arrows.items():
            into.setdefault(target, []).append(name)
        graph = {}
        pending = [(name, self.step((), name)) for name in self.arrows]
        while pending:
            node = pending.pop()
            if node in graph:
                continue
            last, state = node
            succ = []
            for nxt in into.get(self.arrows[last][0], ()):
                new_state = self.step(state, nxt)
                if new_state is not None:
                    succ.append((nxt, new_state))
            graph[node] = succ
            pending.extend(s for s in succ if s not in graph)
        return graph

    def is_acyclic(self):
        try:
            # TopologicalSorter expects predecessors; the reversed orientation
            # has the same cycles.
            TopologicalSorter(self.graph).prepare()
        except CycleError:
            return False
        return True

    def longest_word(self):
        """Length of the longest relation-free path; ``None`` if unbounded."""
        try:
            order = list(TopologicalSorter(self.graph).static_order())
        except CycleError:
            return None
        # static_order lists successors before the nodes that point to them
        best = {}
        for node in order:
            best[node] = 1 + max((best[s] for s in self.graph[node]), default=0)
        return max(best.values(), default=0)


def is_admissible(quiver, relations):
    """True iff some length ``n`` forces every path to contain a relation.

    ``relations`` may hold :class:`~gentle.core.Path` objects or plain
    sequences of arrow names in composition order.
    """
    return RelationAutomaton(quiver.arrows, relations).is_acyclic()


def longest_relation_free_length(quiver, relations):
    return RelationAutomaton(quiver.arrows, relations).longest_word()
