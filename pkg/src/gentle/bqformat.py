"""The ``.bq`` text format for bound quivers.

Line oriented, UTF-8, ``#`` starts a comment::

    vertex <name>
    arrow <name> <source> <target>
    relation <a1> <a2> ... <al>

Relation tokens are arrow names in composition order, so
``s(a_i) == t(a_{i+1})`` and the relation is walked from ``al`` back to
``a1``.  Every declaration must precede its use.
"""

from __future__ import annotations

from gentle.core import BoundQuiver, Quiver
from gentle.errors import InputError, ParseError

HEADER = """\
# bound quiver (.bq)
# relation tokens are in composition order: s(token_i) = t(token_{i+1});
# a relation is walked from its last token back to its first.
"""


def _tokens(line):
    """Split ``line`` into ``(column, token)`` pairs, dropping any comment."""
    out = []
    i, n = 0, len(line)
    while i < n:
        ch = line[i]
        if ch == "#":
            break
        if ch.isspace():
            i += 1
            continue
        j = i
        while j < n and not line[j].isspace() and line[j] != "#":
            j += 1
        out.append((i + 1, line[i:j]))
        i = j
    return out


def parse(text: str) -> BoundQuiver:
    vertices = {}   # name -> line
    arrows = {}     # name -> (source, target)
    relations = []
    seen_rel = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        toks = _tokens(line)
        if not toks:
            continue
        (col, kw), args = toks[0], toks[1:]
        if kw == "vertex":
            if len(args) != 1:
                raise ParseError("expected 'vertex <name>'", lineno, col)
            c, name = args[0]
            if name in vertices:
                raise ParseError(f"duplicate vertex {name!r}", lineno, c)
            vertices[name] = lineno
        elif kw == "arrow":
            if len(args) != 3:
                raise ParseError("expected 'arrow <name> <source> <target>'", lineno, col)
            (c, name), (cs, s), (ct, t) = args
            if name in arrows:
                raise ParseError(f"duplicate arrow {name!r}", lineno, c)
            for cv, v in ((cs, s), (ct, t)):
                if v not in vertices:
                    raise ParseError(f"unknown vertex {v!r}", lineno, cv)
            arrows[name] = (s, t)
        elif kw == "relation":
            if len(args) < 2:
                raise ParseError("a relation needs at least two arrows", lineno, col)
            for c, a in args:
                if a not in arrows:
                    raise ParseError(f"unknown arrow {a!r}", lineno, c)
            for (_, left), (c, right) in zip(args, args[1:]):
                if arrows[left][0] != arrows[right][1]:
                    raise ParseError(
                        f"relation not composable: s({left}) = {arrows[left][0]} "
                        f"but t({right}) = {arrows[right][1]}",
                        lineno, c,
                    )
            word = tuple(a for _, a in args)
            if word in seen_rel:
                raise ParseError(f"duplicate relation {' '.join(word)!r}", lineno, col)
            seen_rel.add(word)
            relations.append(word)
        else:
            raise ParseError(f"unknown declaration {kw!r}", lineno, col)
    touched = {v for st in arrows.values() for v in st}
    for name, lineno in vertices.items():
        if name not in touched:
            raise ParseError(f"isolated vertex {name!r}", lineno)
    try:
        return BoundQuiver(Quiver(vertices, arrows), relations)
    except ParseError:
        raise
    except InputError as exc:
        raise ParseError(str(exc)) from None


def serialize(bq: BoundQuiver) -> str:
    lines = [HEADER.rstrip("\n")]
    lines += [f"vertex {v}" for v in bq.vertices]
    lines += [f"arrow {a} {s} {t}" for a, (s, t) in bq.arrows.items()]
    lines += [f"relation {' '.join(r)}" for r in sorted(bq.relation_words)]
    return "\n".join(lines) + "\n"


def load(path) -> BoundQuiver:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def dump(bq: BoundQuiver, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(bq))
