"""Thompson's group V as prefix replacement maps, demonstrative subgroups and word-problem automata."""

from .cantor import Barrier, cones_disjoint, is_barrier, prefix_relation, refine_to_contain
from .modular import (
    GenSymbol,
    GroupWord,
    element_a,
    element_b,
    element_gz,
    enumerate_normal_forms,
    evaluate,
    f2_generators,
    normalize,
    psi_map,
    z_map,
)
from .prm import Prm, apply_to_word, compose, identity, image_of_cone, invert, is_identity, make_prm

__all__ = [
    "Barrier", "GenSymbol", "GroupWord", "Prm",
    "apply_to_word", "compose", "cones_disjoint", "element_a", "element_b", "element_gz",
    "enumerate_normal_forms", "evaluate", "f2_generators", "identity", "image_of_cone",
    "invert", "is_barrier", "is_identity", "make_prm", "normalize", "prefix_relation",
    "psi_map", "refine_to_contain", "z_map",
]
