"""Dessins d'enfants as permutation pairs.

Handle detection, y- and x-joins, and monodromy-group checks (order,
primitivity, alternating recognition) for triangle-group and modular dessins.
"""

from .catalog import find_psl2_triple, load_dsn, modular_p, named, names, save_dsn, theorem6_dessin
from .dessin import (
    Dessin,
    analyze,
    automorphism_count,
    cover_counts,
    dessin_type,
    genus_signature,
    hurwitz_genus,
    is_isomorphic,
    is_quotient,
    macbeath_classify,
    mirror,
    new_dessin,
    passport,
)
from .expr import evaluate, format_expr, parse_expr
from .groups import build_chain, is_primitive, jordan_certificate, recognize
from .joins import Handle, multiple_y_join, twist_y_join, x_handles, x_join, y_handles, y_join
from .perm import Permutation, commutator, compose, cycle_analysis, format_cycles, inverse, parse_cycles

__version__ = "0.1.0"

__all__ = [
    "Permutation", "parse_cycles", "format_cycles", "compose", "inverse", "commutator", "cycle_analysis",
    "build_chain", "recognize", "is_primitive", "jordan_certificate",
    "Dessin", "new_dessin", "dessin_type", "genus_signature", "passport", "mirror", "is_isomorphic",
    "is_quotient", "automorphism_count", "cover_counts", "hurwitz_genus", "macbeath_classify", "analyze",
    "Handle", "y_handles", "x_handles", "y_join", "multiple_y_join", "twist_y_join", "x_join",
    "named", "names", "load_dsn", "save_dsn", "modular_p", "theorem6_dessin", "find_psl2_triple",
    "parse_expr", "format_expr", "evaluate",
]
