"""Rigidity and global rigidity of planar linearly constrained frameworks.

A framework here is a looped simple graph together with rational points
for its vertices and rational normal vectors for its loops; each loop
pins its vertex to a line (a slider).  The package decides generic
rigidity via a mixed pebble game, decides global rigidity, produces
exact stress-matrix certificates and inductive construction sequences,
and enumerates all frameworks equivalent to a generic realization.
"""

from . import analysis, construct, exact, graphs, matroid
from .errors import LcRigidityError
from .graphs import LoopedSimpleGraph, build

__all__ = [
    "analysis",
    "construct",
    "exact",
    "graphs",
    "matroid",
    "LcRigidityError",
    "LoopedSimpleGraph",
    "build",
]
