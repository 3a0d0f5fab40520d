__all__ = [
    'PrimeField', 'Matrix', 'rref', 'rank', 'kernel_basis',
    'left_kernel_basis', 'column_space', 'complement_columns', 'solve',
    'inverse', 'hstack', 'vstack', 'block_diag'
]

from .field import PrimeField
from .matrix import (Matrix, rref, rank, kernel_basis, left_kernel_basis,
                     column_space, complement_columns, solve, inverse, hstack,
                     vstack, block_diag)
