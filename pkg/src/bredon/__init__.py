"""Exact computation of RO(C_n)-graded Bredon cohomology data for the
infinite quaternionic projective space: cyclic-group representation
theory, properly even cell structures, point-cohomology tables, the
additive free-module structure, and the full multiplicative ring for
C_2."""

__version__ = "0.1.0"

from . import brsu2, cellgen, cli, mackey, rep_cn, ring_c2

__all__ = ["rep_cn", "cellgen", "mackey", "brsu2", "ring_c2", "cli", "__version__"]
