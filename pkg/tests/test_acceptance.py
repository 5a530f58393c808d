"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line with its measured time.
Run directly (``python tests/test_acceptance.py``) to get just those lines.
"""

import itertools
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path as FsPath

import pytest

sys.path.insert(0, str(FsPath(__file__).parent))

import oracles  # noqa: E402
from conftest import make_e1, make_e2, make_e3, make_k  # noqa: E402
from test_isomorphism import relabel  # noqa: E402
from gentle import (  # noqa: E402
    are_isomorphic,
    critical_arrows,
    cycle_excess,
    derived_invariant,
    evaluate_path,
    forbidden_threads,
    is_gentle,
    is_isomorphism,
    lambda0,
    lemma_extension_pipeline,
    maximal_paths,
    parse,
    permitted_threads,
    phi_prime,
    reflect,
    reflection_applicable,
    serialize,
    string_module,
)
from gentle.cli import main as cli_main  # noqa: E402
from gentle.generate import corpus  # noqa: E402
from gentle.invariant import _ThreadMaps  # noqa: E402
from gentle.sweep import sweep  # noqa: E402


@dataclass
class Outcome:
    number: int
    title: str
    failures: list
    seconds: float
    limit: float | None
    detail: str = ""
    note: str = ""

    @property
    def passed(self):
        return not self.failures and (self.limit is None or self.seconds < self.limit)

    def line(self):
        limit = f" (limit {self.limit:g} s)" if self.limit else ""
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} criterion {self.number:2d}: {self.title}; {self.detail}; {self.seconds:.2f} s{limit}"
        if self.failures:
            text += f"; {len(self.failures)} violations, first: {self.failures[0]}"
        if self.note:
            text += f"; NOTE {self.note}"
        return text


def lambda0_params(max_p):
    return [(p, r) for p in range(1, max_p + 1) for r in range(-1, p) if (p, r) != (1, -1)]


def timed(fn):
    start = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - start


def criterion_1():
    def run():
        bad = []
        for p, r in lambda0_params(8):
            bq = lambda0(p, r)
            if not is_gentle(bq) or cycle_excess(bq) != 1 or derived_invariant(bq).norm() != 1:
                bad.append(f"lambda0({p},{r})")
        return bad
    bad, secs = timed(run)
    return Outcome(1, "lambda0 norm one", bad, secs, 1.0, f"{len(lambda0_params(8))} members")


def criterion_2():
    def run():
        bad = []
        frozen = {(2, 4): 1}
        for p, r in ((2, 0), (2, 1)):
            bq = lambda0(p, r)
            if oracles.invariant(bq) != frozen or dict(derived_invariant(bq).entries) != frozen:
                bad.append(f"fixture lambda0({p},{r})")
        for p in range(2, 9):
            values = {derived_invariant(lambda0(p, r)) for r in range(-1, p)}
            if len(values) != 1:
                bad.append(f"p={p}: {sorted(map(str, values))}")
        return bad
    bad, secs = timed(run)
    return Outcome(2, "lambda0 phi independent of r", bad, secs, 1.0, "p in [2, 8]")


def criterion_3():
    def run():
        bad = []
        for p, r in lambda0_params(6):
            got, want = lemma_extension_pipeline(p, r), lambda0(p + 1, r)
            iso = are_isomorphic(got, want)
            if iso is None or not is_isomorphism(iso, got, want):
                bad.append(f"pipeline({p},{r})")
        return bad
    bad, secs = timed(run)
    return Outcome(3, "extension pipeline reaches lambda0(p+1, r)", bad, secs, 5.0,
                   f"{len(lambda0_params(6))} cases, witnesses checked")


def criterion_4():
    def run():
        bad, count = [], 0
        quivers = corpus()
        for i, bq in enumerate(quivers):
            phi = derived_invariant(bq)
            for x in bq.vertices:
                if not reflection_applicable(bq, x):
                    continue
                count += 1
                out = reflect(bq, x)
                if not is_gentle(out) or derived_invariant(out) != phi:
                    bad.append(f"seed {i} vertex {x}")
        return bad, count, len(quivers)
    (bad, count, n), secs = timed(run)
    return Outcome(4, "reflection preserves phi and gentleness", bad, secs, 30.0,
                   f"{n} quivers, {count} reflections")


def criterion_5():
    def run():
        bad = []
        quivers = corpus()
        tiny = [(i, bq) for i, bq in enumerate(quivers) if len(bq.vertices) <= 4]
        for i, bq in tiny:
            if oracles.invariant(bq) != dict(derived_invariant(bq).entries):
                bad.append(f"invariant seed {i}")
        small = [(i, bq) for i, bq in enumerate(quivers) if len(bq.vertices) <= 6]
        pairs = positive = 0
        candidates = itertools.combinations(small, 2)
        relabeled = ((s, (f"{i}'", relabel(bq, i))) for s in small for i, bq in [s])
        for (i, a), (j, b) in itertools.chain(candidates, relabeled):
            pairs += 1
            iso = are_isomorphic(a, b)
            truth = oracles.isomorphic(a, b)
            positive += truth
            if truth != (iso is not None) or (iso is not None and not is_isomorphism(iso, a, b)):
                bad.append(f"isomorphism seeds {i}, {j}")
        return bad, len(tiny), pairs, positive
    (bad, tiny, pairs, positive), secs = timed(run)
    return Outcome(5, "oracle equivalence", bad, secs, 60.0,
                   f"{tiny} invariants, {pairs} pairs ({positive} isomorphic)")


def criterion_6():
    def run():
        bad, unit = [], 0
        for i, bq in enumerate(corpus()):
            if derived_invariant(bq).norm() == 1:
                unit += 1
                if critical_arrows(bq):
                    bad.append(f"seed {i}")
        return bad, unit
    (bad, unit), secs = timed(run)
    return Outcome(6, "norm one implies no critical arrows", bad, secs, None, f"{unit} quivers with norm 1")


def criterion_7():
    def run():
        bad = []
        for i, bq in enumerate(corpus()):
            maps = _ThreadMaps(bq)
            if len(maps.permitted) != len(maps.forbidden):
                bad.append(f"seed {i}: |P| != |F|")
                continue
            if sorted(maps.phi(w) for w in maps.forbidden) != maps.forbidden:
                bad.append(f"seed {i}: Phi")
            crit = critical_arrows(bq)
            if sorted(phi_prime(bq, a) for a in crit) != crit:
                bad.append(f"seed {i}: Phi'")
            if permitted_threads(bq) != maps.permitted or forbidden_threads(bq) != maps.forbidden:
                bad.append(f"seed {i}: thread sets")
        return bad
    bad, secs = timed(run)
    return Outcome(7, "thread maps are bijections", bad, secs, None, "1000 quivers")


def criterion_8():
    def run():
        return sweep(["lambda0", "lambda1", "lambda2"], 8)
    report, secs = timed(run)
    bad = [f"{name}: {c['failures'][:3]}" for name, c in sorted(report.checks.items()) if not c["passed"]]
    groups = report.within_family_collisions
    note = ", ".join(
        f"{fam} has {len(gs)} within-family collision groups"
        f" ({sum(len(g['isomorphism_classes']) > 1 for g in gs)} with non-isomorphic members)"
        for fam, gs in sorted(groups.items()) if gs
    )
    return Outcome(8, "lambda0 separated from lambda1/lambda2", bad, secs, None,
                   f"{len(report.records)} records up to 8 vertices", note)


def criterion_9():
    def run():
        bad, count = [], 0
        for i, bq in enumerate(corpus()):
            for sigma in maximal_paths(bq):
                count += 1
                m = string_module(bq, sigma)
                if m.total_dimension() != sigma.length + 1:
                    bad.append(f"seed {i} {sigma}: dimension")
                if any(evaluate_path(m, rho).any() for rho in bq.relations):
                    bad.append(f"seed {i} {sigma}: relation")
        return bad, count
    (bad, count), secs = timed(run)
    return Outcome(9, "string modules", bad, secs, None, f"{count} maximal paths")


def criterion_10(tmp_dir):
    def run():
        bad = []
        fixtures = [make_e1(), make_e2(), make_e3(), make_k(), lambda0(3, 1)]
        for i, bq in enumerate(fixtures + list(corpus())):
            text = serialize(bq)
            again = parse(text)
            if again != bq or serialize(again) != text:
                bad.append(f"round trip {i}")
        outputs = []
        for jobs in (1, 1, 3):
            out = FsPath(tmp_dir) / f"sweep_{len(outputs)}.json"
            code = cli_main(["sweep", "--family", "all", "--max", "7", "--jobs", str(jobs), "--out", str(out)])
            if code != 0:
                bad.append(f"sweep exit {code} with --jobs {jobs}")
            outputs.append(out.read_bytes())
        if len(set(outputs)) != 1:
            bad.append("sweep reports differ")
        json.loads(outputs[0])
        return bad
    bad, secs = timed(run)
    return Outcome(10, "round trip and deterministic sweeps", bad, secs, None,
                   "1005 quivers, 3 sweeps (--jobs 1, 1, 3)")


def report(capsys, outcome):
    with capsys.disabled():
        print("\n" + outcome.line())
    assert not outcome.failures, outcome.failures[:5]
    if outcome.limit is not None:
        assert outcome.seconds < outcome.limit


@pytest.mark.parametrize("number", range(1, 10))
def test_criterion(capsys, number):
    report(capsys, globals()[f"criterion_{number}"]())


def test_criterion_10(capsys, tmp_path):
    report(capsys, criterion_10(tmp_path))


if __name__ == "__main__":
    import contextlib
    import io
    import tempfile

    ok = True
    with tempfile.TemporaryDirectory() as tmp:
        for n in range(1, 11):
            with contextlib.redirect_stderr(io.StringIO()):
                outcome = criterion_10(tmp) if n == 10 else globals()[f"criterion_{n}"]()
            print(outcome.line())
            ok &= outcome.passed
    sys.exit(0 if ok else 1)
