"""Exact computations for the Fock model of GL(n) x O(p, q): partitions and
branching, pluriharmonic polynomials, exterior forms, cocycle values,
theta-stable parabolics and archimedean Arthur parameters."""

from .gaussian import GaussianRational
from .partitions import Partition
from .polyfock import Ambient, SparsePoly
from .exterior import MultiVector
from .vz import LeviDatum
from .arthur import ArchArthurParameter, CharDatum, Factor

__version__ = "0.1.0"

__all__ = ["GaussianRational", "Partition", "Ambient", "SparsePoly", "MultiVector", "LeviDatum",
           "ArchArthurParameter", "CharDatum", "Factor", "__version__"]
