"""Exact computation with toric rings of stable set polytopes.

The package builds the toric ideal of the stable set polytope of a finite
simple graph and certifies algebraic properties of the quotient ring:
quadratic generation, Groebner bases and initial ideals, Hilbert series and
h-vectors, Gorensteinness via regular sequences and socles, Koszulness via
graded Betti numbers of the residue field, and existence or nonexistence of
quadratic Groebner bases under any term order.

All arithmetic is exact (rationals, or a prime field for cross-checks).
"""

__version__ = "0.1.0"

from .errors import InputError, ResourceCapError

__all__ = ["InputError", "ResourceCapError", "__version__"]
