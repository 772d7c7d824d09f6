"""Exact quantum Schubert calculus on G/B and G/P with a lexicographic grading,
Peterson-Woodward lifts and the comparison map between the two quantum rings."""

from .errors import FlagQHError
from .grading import GradeVector, gr, gr_prime, grade_table
from .parabolic import ParabolicSetup, make_setup, preset
from .qh import QHClass, chevalley_mul, engine_for, gw_invariant, qhp_mul, qmul
from .rootsys import RootSystem, build_root_system
from .weyl import WeylElement, from_word, identity

__version__ = "0.1.0"

__all__ = [
    "FlagQHError", "GradeVector", "ParabolicSetup", "QHClass", "RootSystem", "WeylElement",
    "build_root_system", "chevalley_mul", "engine_for", "from_word", "gr", "gr_prime", "grade_table",
    "gw_invariant", "identity", "make_setup", "preset", "qhp_mul", "qmul",
]
