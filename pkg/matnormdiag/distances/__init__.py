from .msd import MATRIX_BASED, VECTOR_BASED, MsdVector, msd_matrix, msd_vector

__all__ = [
    'MsdVector', 'msd_matrix', 'msd_vector', 'MATRIX_BASED', 'VECTOR_BASED'
]
