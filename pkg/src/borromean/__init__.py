"""
Telling the Borromean rings from the unlink by computation.

Link diagrams (PD codes) give Wirtinger presentations; Dehn surgery adds
relators; coset enumeration and homomorphism search decide the resulting
groups.  Surgery with framing -1 on every Borromean component gives a group
of order 120 (the Poincare homology sphere), while the same surgery on the
unlink gives the trivial group, so the two links differ.
"""

from .cosets import CosetTable, Exhausted, enumerate_cosets, todd_coxeter
from .decide import Homomorphism, TargetTooLarge, find_homomorphisms, prove_nontrivial
from .homology import AbelianGroup, abelianization_matrix, h1, smith_normal_form
from .links import (
    LinkDiagram,
    linking_number,
    parse_pd,
    surgery_presentation,
    wirtinger,
    zero_framed_longitude,
)
from .perm import Permutation, alternating_group, check_relations, closure, compose, evaluate_word, parse_cycles
from .presentation import (
    Presentation,
    change_generators,
    eliminate_generator,
    equivalent_up_to_renaming,
    parse_presentation,
    simplify,
)
from .words import ParseError, Word, cyclic_normal_form, parse_word

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "CosetTable",
    "Exhausted",
    "Homomorphism",
    "LinkDiagram",
    "ParseError",
    "Permutation",
    "Presentation",
    "TargetTooLarge",
    "Word",
    "abelianization_matrix",
    "alternating_group",
    "change_generators",
    "check_relations",
    "closure",
    "compose",
    "cyclic_normal_form",
    "eliminate_generator",
    "enumerate_cosets",
    "equivalent_up_to_renaming",
    "evaluate_word",
    "find_homomorphisms",
    "h1",
    "linking_number",
    "parse_cycles",
    "parse_pd",
    "parse_presentation",
    "parse_word",
    "prove_nontrivial",
    "simplify",
    "smith_normal_form",
    "surgery_presentation",
    "todd_coxeter",
    "wirtinger",
    "zero_framed_longitude",
]
