"""Combinatorics of gentle bound quivers.

Covers the thread-orbit derived invariant, generalized APR reflections,
one-point coextensions and the families of gentle two-cycle bound quivers.
"""

from gentle.admissible import is_admissible
from gentle.bqformat import dump, load, parse, serialize
from gentle.core import (
    BoundQuiver,
    Path,
    Quiver,
    compose,
    contains_relation_subpath,
    cycle_excess,
    enumerate_paths,
    is_antipath,
    is_gentle,
    is_two_cycle,
    maximal_antipaths,
    maximal_paths,
)
from gentle.errors import (
    CompositionError,
    GeneratorError,
    GentlenessViolation,
    InputError,
    InternalInvariantError,
    NotApplicableError,
    ParseError,
    QuiverError,
    UnsupportedInputError,
)
from gentle.families import lambda0, lambda1, lambda2
from gentle.generate import corpus, random_gentle
from gentle.invariant import (
    DerivedInvariant,
    Thread,
    critical_arrows,
    derived_invariant,
    finite_gldim_proxy,
    forbidden_threads,
    norm,
    permitted_threads,
    phi1,
    phi2,
    phi_prime,
)
from gentle.isomorphism import Isomorphism, are_isomorphic, is_isomorphism
from gentle.strings import Representation, evaluate_path, string_module
from gentle.transforms import (
    coextend,
    lemma_extension_pipeline,
    reflect,
    reflection_applicable,
    shift_relation,
)

__version__ = "0.1.0"
