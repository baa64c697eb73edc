"""Exact decomposition engine for a mixed quantum-supergroup spin chain.

The chain is a mixed tensor power of the two dual three-dimensional
fundamental modules of the rank-(2|1) quantum supergroup at generic q.
The package computes its indecomposable content, realizes the walled
Brauer generators on it, and assembles and verifies the full bimodule
decomposition over the quantum group and its centralizer.
"""

from .fusion import GrothVector, chain_decompose, dim_of_groth, fuse_with_f, fuse_with_v
from .qarith import EvalPoint, LaurentPoly, QScalar, eval_points, qint
from .uqmod import (
    R,
    RLabel,
    Z,
    ZLabel,
    build_projective,
    build_simple,
    dim_bar,
    dim_r,
    dim_z,
    gl2_decomposition,
    weight_multiset,
)

__all__ = [
    "GrothVector", "chain_decompose", "dim_of_groth", "fuse_with_f", "fuse_with_v",
    "EvalPoint", "LaurentPoly", "QScalar", "eval_points", "qint",
    "R", "RLabel", "Z", "ZLabel", "build_projective", "build_simple",
    "dim_bar", "dim_r", "dim_z", "gl2_decomposition", "weight_multiset",
]

__version__ = "0.1.0"
