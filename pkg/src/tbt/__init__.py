"""Exact arithmetic for twisted homeomorphisms of multicolored Cantor cubes.

Submodules:

- ``cantor``: bricks, partitions, points and the dyadic test
- ``actions``: bundled group actions on color sets
- ``elements``: groupoid elements, composition, direct sum, germinal twists
- ``forests``: forests, spectra, the coset order, joins and cores
- ``words`` / ``factorization``: word grammar, iota embeddings, factorization, rho
- ``complexes`` / ``homology``: matching complexes, VE_m, E_m and integral homology
"""

from .actions import (
    Cyclic2Action,
    HoughtonAction,
    ThompsonFAction,
    TrivialAction,
    TreePair,
    action_from_spec,
)
from .cantor import (
    Brick,
    Partition,
    PointPrefix,
    brick,
    brick_intersection,
    brick_subset,
    complement_bricks,
    is_dyadic_partition,
    is_partition,
    refine_to_dyadic,
    whole_cube,
)
from .complexes import (
    Complex,
    EmVertex,
    build_E,
    build_VE,
    homology,
    matching_complex,
    morse_value,
    nu,
    sublevel,
)
from .elements import (
    Element,
    compose,
    compose_all,
    direct_sum,
    equal,
    germinal_twist,
    germinal_twist_set,
    identity,
    invert,
    perm,
    simple_split,
    twist,
)
from .factorization import factorize, generating_graph, iota0, iota1, rho
from .forests import (
    Forest,
    TwistedPermutation,
    coset_equal,
    coset_leq,
    elementary_core,
    forest_join,
    spectrum,
    special_spectrum,
    swap,
)
from .words import evaluate, parse, to_text

__version__ = "0.1.0"
