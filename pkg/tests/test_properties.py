from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

import oracles
from gentle import (
    are_isomorphic,
    coextend,
    critical_arrows,
    derived_invariant,
    enumerate_paths,
    forbidden_threads,
    is_admissible,
    is_gentle,
    maximal_antipaths,
    maximal_paths,
    parse,
    permitted_threads,
    phi1,
    phi2,
    phi_prime,
    random_gentle,
    reflect,
    reflection_applicable,
    serialize,
)
from gentle.core import Quiver
from test_isomorphism import relabel

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

gentle_quivers = st.builds(random_gentle, st.integers(0, 10**6), st.integers(1, 7))


@st.composite
def relation_systems(draw):
    """A small arbitrary quiver with composable relations of length 2 or 3."""
    n = draw(st.integers(1, 3))
    vs = [f"v{i}" for i in range(n)]
    m = draw(st.integers(1, 4))
    arrows = {f"a{i}": (draw(st.sampled_from(vs)), draw(st.sampled_from(vs))) for i in range(m)}
    used = sorted({v for st_ in arrows.values() for v in st_})
    words = []
    for a in arrows:
        for b in arrows:
            if arrows[a][0] == arrows[b][1]:
                words.append((a, b))
                for c in arrows:
                    if arrows[b][0] == arrows[c][1]:
                        words.append((a, b, c))
    rels = draw(st.lists(st.sampled_from(words), unique=True, max_size=5)) if words else []
    return Quiver(used, arrows), rels


@given(relation_systems())
def test_admissibility_matches_window_oracle(system):
    q, rels = system
    assert is_admissible(q, rels) == oracles.admissible(q.arrows, rels)


@given(gentle_quivers)
def test_gentle_implies_admissible(bq):
    assert is_gentle(bq) and is_admissible(bq.quiver, bq.relations)


@given(gentle_quivers)
def test_paths_match_oracle(bq):
    got = {p.arrows for p in enumerate_paths(bq, len(bq.arrows) + 2)}
    assert got == {w for _, _, w in oracles.all_paths(bq)}


@given(gentle_quivers)
def test_maximal_paths_match_oracle(bq):
    got = [p.arrows for p in maximal_paths(bq)]
    assert sorted(got) == oracles.maximal_paths(bq)
    assert all(len(w) > 0 for w in got)


@given(gentle_quivers)
def test_maximal_antipaths_match_oracle(bq):
    assert sorted(p.arrows for p in maximal_antipaths(bq)) == oracles.maximal_antipaths(bq)


@given(gentle_quivers)
def test_thread_maps_are_bijections(bq):
    perm, forb = permitted_threads(bq), forbidden_threads(bq)
    assert len(perm) == len(forb)
    assert sorted(phi1(bq, s) for s in perm) == forb
    assert sorted(phi2(bq, w) for w in forb) == perm


@given(gentle_quivers)
def test_phi_prime_is_permutation(bq):
    crit = critical_arrows(bq)
    images = [phi_prime(bq, a) for a in crit]
    assert sorted(images) == crit
    assert all((a, b) in bq.relation_words for a, b in zip(crit, images))


@given(gentle_quivers, st.integers(0, 1000))
def test_invariant_survives_relabeling(bq, seed):
    other = relabel(bq, seed)
    assert derived_invariant(other) == derived_invariant(bq)
    iso = are_isomorphic(bq, other)
    assert iso is not None


@given(gentle_quivers)
def test_norm_counts_orbits(bq):
    assert derived_invariant(bq).norm() == sum(oracles.invariant(bq).values())


@given(gentle_quivers, st.data())
def test_coextension(bq, data):
    sigma = data.draw(st.sampled_from(maximal_paths(bq)))
    out = coextend(bq, sigma)
    assert (len(out.vertices), len(out.arrows)) == (len(bq.vertices) + 1, len(bq.arrows) + 1)
    assert is_gentle(out)


@given(gentle_quivers)
def test_reflection_keeps_names_and_invariant(bq):
    for x in bq.vertices:
        if reflection_applicable(bq, x):
            out = reflect(bq, x)
            assert out.vertices == bq.vertices and set(out.arrows) == set(bq.arrows)
            assert is_gentle(out)
            assert derived_invariant(out) == derived_invariant(bq)


@given(gentle_quivers)
def test_serialization_round_trip(bq):
    text = serialize(bq)
    assert parse(text) == bq and serialize(parse(text)) == text
