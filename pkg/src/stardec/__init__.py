"""Matrix decompositions over *-rings with canonical block multisets.

Public surface: scalar/matrix algebra for the supported rings, canonical
generator blocks, the SVD / spectral / Jordan drivers, seeded test
generators and the command-line front end.
"""

from .scalars import RingId, Scalar, conj, inv, mul
from .matrices import (
    Matrix,
    adjoint,
    bordered,
    direct_sum,
    is_hermitian,
    is_unitary,
    matmul,
)
from .blocks import Block, BlockMultiset, is_generator, multiset_eq, normalize_block
from .decomp import (
    DecompOptions,
    Factorization,
    herm_integer_canonical,
    jordan,
    spectral,
    svd,
    theorem2_bridge,
)

__all__ = [
    "RingId",
    "Scalar",
    "Matrix",
    "conj",
    "inv",
    "mul",
    "adjoint",
    "bordered",
    "direct_sum",
    "is_hermitian",
    "is_unitary",
    "matmul",
    "Block",
    "BlockMultiset",
    "is_generator",
    "multiset_eq",
    "normalize_block",
    "DecompOptions",
    "Factorization",
    "spectral",
    "svd",
    "jordan",
    "herm_integer_canonical",
    "theorem2_bridge",
]

__version__ = "0.1.0"
