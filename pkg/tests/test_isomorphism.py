import random

import oracles
from conftest import make_e1
from gentle import BoundQuiver, Isomorphism, are_isomorphic, is_isomorphism, lambda0, lemma_extension_pipeline


def relabel(bq, seed):
    rng = random.Random(seed)
    vs = list(bq.vertices)
    rng.shuffle(vs)
    vmap = {v: f"w{i}" for i, v in enumerate(vs)}
    arrs = list(bq.arrows)
    rng.shuffle(arrs)
    amap = {a: f"b{i}" for i, a in enumerate(arrs)}
    return Isomorphism(tuple(sorted(vmap.items())), tuple(sorted(amap.items()))).apply(bq)


def test_renamed_e1(e1):
    other = relabel(e1, 3)
    iso = are_isomorphic(e1, other)
    assert iso is not None and is_isomorphism(iso, e1, other)


def test_e2_e3_not_isomorphic(e2, e3):
    assert are_isomorphic(e2, e3) is None
    assert not oracles.isomorphic(e2, e3)


def test_pipeline_witness():
    a, b = lemma_extension_pipeline(1, 0), lambda0(2, 0)
    iso = are_isomorphic(a, b)
    assert iso is not None and is_isomorphism(iso, a, b)


def test_witness_is_lex_least():
    # swapping x and y is also a witness; the identity is lex-least
    bq = BoundQuiver.build(["a", "b"], [("x", "a", "b"), ("y", "a", "b")])
    iso = are_isomorphic(bq, bq)
    assert iso.arrow_map == {"x": "x", "y": "y"}


def test_relations_matter():
    q = [("x", "a", "b"), ("y", "b", "c")]
    assert are_isomorphic(BoundQuiver.build("abc", q, [("y", "x")]), BoundQuiver.build("abc", q)) is None


def test_json_form():
    e1 = make_e1()
    iso = are_isomorphic(e1, e1)
    assert iso.to_json() == {"vertices": {"1": "1", "2": "2"},
                             "arrows": {"alpha1": "alpha1", "beta": "beta", "gamma": "gamma"}}


def test_bad_witness_rejected(e1):
    iso = Isomorphism((("1", "2"), ("2", "1")), (("alpha1", "alpha1"), ("beta", "beta"), ("gamma", "gamma")))
    assert not is_isomorphism(iso, e1, e1)
