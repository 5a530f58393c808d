"""Parameter sweeps over the families with invariant-level checks.

The report is deterministic: records are listed in family order and then in
lexicographic parameter order regardless of how many worker processes
computed them, and the JSON is written with sorted keys.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from gentle.core import cycle_excess
from gentle.families import FAMILIES, family_parameters
from gentle.invariant import derived_invariant, finite_gldim_proxy
from gentle.isomorphism import are_isomorphic

PARAM_NAMES = {
    "lambda0": ("p", "r"),
    "lambda1": ("p1", "p2", "p3", "p4", "r1"),
    "lambda2": ("p1", "p2", "p3", "r1", "r2"),
}


def label(family, params):
    return f"{family}({','.join(str(p) for p in params)})"


def compute_record(task):
    family, params = task
    bq = FAMILIES[family](*params)
    phi = derived_invariant(bq)
    return {
        "family": family,
        "params": dict(zip(PARAM_NAMES[family], params)),
        "label": label(family, params),
        "vertices": len(bq.vertices),
        "arrows": len(bq.arrows),
        "gentle": bq.is_gentle,
        "cycle_excess": cycle_excess(bq),
        "phi": phi.triples(),
        "norm": phi.norm(),
        "finite_gldim": finite_gldim_proxy(bq),
    }


def _key(rec):
    return (rec["vertices"], json.dumps(rec["phi"]))


def _groups(records):
    by_key = {}
    for rec in records:
        by_key.setdefault(_key(rec), []).append(rec)
    out = []
    for key in sorted(by_key, key=lambda k: (k[0], k[1])):
        members = by_key[key]
        if len(members) > 1:
            out.append({
                "vertices": members[0]["vertices"],
                "phi": members[0]["phi"],
                "members": [m["label"] for m in members],
            })
    return out


@dataclass
class SweepReport:
    families: list
    max_vertices: int
    records: list = field(default_factory=list)
    collision_groups: list = field(default_factory=list)
    checks: dict = field(default_factory=dict)
    within_family_collisions: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(c["passed"] for c in self.checks.values())

    def to_dict(self):
        return {
            "parameters": {"families": self.families, "max_vertices": self.max_vertices},
            "records": self.records,
            "collision_groups": self.collision_groups,
            "checks": self.checks,
            "within_family_collisions": self.within_family_collisions,
            "passed": self.passed,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"


def _isomorphism_classes(group, records_by_label):
    """Split a collision group into classes of isomorphic bound quivers."""
    classes = []
    for name in group["members"]:
        rec = records_by_label[name]
        bq = FAMILIES[rec["family"]](*rec["params"].values())
        for cls in classes:
            if are_isomorphic(bq, cls[0]) is not None:
                cls[1].append(name)
                break
        else:
            classes.append((bq, [name]))
    return [names for _, names in classes]


def _check(failures):
    return {"passed": not failures, "failures": failures}


def sweep(families=("lambda0", "lambda1", "lambda2"), max_vertices=8, jobs=1) -> SweepReport:
    """Compute the invariant of every family member with at most
    ``max_vertices`` vertices and evaluate the classification checks."""
    families = [f for f in FAMILIES if f in set(families)]
    tasks = [(f, params) for f in families for params in family_parameters(f, max_vertices)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(compute_record, tasks, chunksize=32))
    else:
        records = [compute_record(t) for t in tasks]

    report = SweepReport(families, max_vertices, records, _groups(records))
    report.checks["gentle_two_cycle"] = _check(
        [r["label"] for r in records if not r["gentle"] or r["cycle_excess"] != 1]
    )
    zero = [r for r in records if r["family"] == "lambda0"]
    if zero:
        report.checks["lambda0_norm_one"] = _check([r["label"] for r in zero if r["norm"] != 1])
        by_p = {}
        for r in zero:
            by_p.setdefault(r["params"]["p"], []).append(r)
        report.checks["lambda0_same_phi_per_p"] = _check(
            [f"p={p}" for p, rs in sorted(by_p.items()) if len({json.dumps(r["phi"]) for r in rs}) != 1]
        )
        others = {_key(r): r["label"] for r in records if r["family"] != "lambda0"}
        report.checks["lambda0_separated_from_other_families"] = _check(
            [f"{r['label']} ~ {others[_key(r)]}" for r in zero if _key(r) in others]
        )
    by_label = {r["label"]: r for r in records}
    for fam in ("lambda1", "lambda2"):
        if fam in families:
            groups = _groups([r for r in records if r["family"] == fam])
            for g in groups:
                g["isomorphism_classes"] = _isomorphism_classes(g, by_label)
            report.within_family_collisions[fam] = groups
    return report

