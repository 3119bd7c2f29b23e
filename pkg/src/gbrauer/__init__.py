"""Exact computational algebra for graded Brauer algebras.

Diagram arithmetic with exact scalars, up-down tableau combinatorics,
Jucys-Murphy spectral idempotents, homogeneous generators, the graded
cellular basis, and machine verification of the graded presentation.
"""

from .diagrams import BrauerAlgebra, Element
from .generators import GeneratorSet, load_generator_set, save_generator_set
from .basis import GradedBasis, build_basis

__version__ = "0.1.0"

__all__ = [
    "BrauerAlgebra",
    "Element",
    "GeneratorSet",
    "GradedBasis",
    "build_basis",
    "load_generator_set",
    "save_generator_set",
    "__version__",
]
