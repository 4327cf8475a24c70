"""Milnor invariants of oriented links via unitriangular matrix representations.

Typical use::

    from milnor import build, catalog_lookup, first_nonvanishing
    result = first_nonvanishing(build(catalog_lookup("5_1^2")))
    result.m, result.psi
"""

from .catalog import UnknownLink, catalog_lookup, load_catalog
from .diagram import Diagram, PDCode, PDError, build, linking_matrix, mirror, parse_pd
from .engine import (
    InvariantResult,
    LiftRefused,
    NotInImage,
    apply_Ij,
    base_assignment,
    first_nonvanishing,
    invert_Ij,
    lift,
    mu_numbers,
    psi,
)
from .higher import DefectLedger, higher_mu, lie_part
from .lattice import DeltaLattice, lattice_equal
from .lyndon import decompose, lyndon_basis, lyndon_words
from .magnus import magnus_expand
from .milnorlink import closed_form, longitude_tensor
from .quandle import cocycle_sum
from .tensors import IntervalTensor, bracket, left_collecting_bracket
from .unipotent import UniMatrix, represent_word
from .words import GroupWord, fox_coefficient, parse_word

__version__ = "0.1.0"

__all__ = [
    "DefectLedger", "DeltaLattice", "Diagram", "GroupWord", "IntervalTensor", "InvariantResult",
    "LiftRefused", "NotInImage", "PDCode", "PDError", "UniMatrix", "UnknownLink",
    "apply_Ij", "base_assignment", "bracket", "build", "catalog_lookup", "closed_form",
    "cocycle_sum", "decompose", "first_nonvanishing", "fox_coefficient", "higher_mu",
    "invert_Ij", "lattice_equal", "left_collecting_bracket", "lie_part", "lift", "linking_matrix",
    "load_catalog", "longitude_tensor", "lyndon_basis", "lyndon_words", "magnus_expand",
    "mirror", "mu_numbers", "parse_pd", "parse_word", "psi", "represent_word",
]
