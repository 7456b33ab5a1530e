"""
Exact linear algebra over the rationals for the small integer matrices
(Cartan matrices, root spans) used throughout the package.

Matrices are numpy object arrays of `fractions.Fraction`, so that numpy
indexing and row operations can be used without ever leaving exact
arithmetic.
"""
from __future__ import print_function, division, absolute_import

from fractions import Fraction

import numpy as np


class LinearAlgebraError(ValueError):
    pass


def as_fraction_array(A):
    """ Copy `A` into an object array of Fractions

    Parameters
    ----------
    A : array-like
        Integer, Fraction or string entries (strings as accepted by
        `fractions.Fraction`).

    Returns
    -------
    F : ndarray
        Object array of the same shape as `A`.
    """
    A = np.asarray(A, dtype=object)
    F = np.empty(A.shape, dtype=object)
    for idx in np.ndindex(*A.shape):
        F[idx] = to_fraction(A[idx])
    return F


def to_fraction(x):
    """ Exact Fraction from an int, numpy integer, Fraction or string.
    """
    if isinstance(x, np.integer):
        x = int(x)
    if isinstance(x, (float, np.floating)):
        raise LinearAlgebraError('refusing inexact value %r' % (x,))
    return Fraction(x)


def row_echelon(A):
    """ Reduced row echelon form of `A`

    Parameters
    ----------
    A : array-like
        2D array with rational entries.

    Returns
    -------
    R : ndarray
        Reduced row echelon form, object array of Fractions.
    pivots : list of int
        Pivot columns.
    """
    R = as_fraction_array(A)
    if R.ndim != 2:
        raise LinearAlgebraError('expecting a 2D array, got shape %s' % (R.shape,))
    nrow, ncol = R.shape
    pivots = []
    row = 0
    for col in range(ncol):
        if row == nrow:
            break
        nonzero = [i for i in range(row, nrow) if R[i, col] != 0]
        if not nonzero:
            continue
        pivot = nonzero[0]
        if pivot != row:
            R[[row, pivot]] = R[[pivot, row]]
        R[row] = R[row] / R[row, col]
        for i in range(nrow):
            if i != row and R[i, col] != 0:
                R[i] = R[i] - R[i, col] * R[row]
        pivots.append(col)
        row += 1
    return R, pivots


def rank(A):
    """ Exact rank of a rational matrix; the empty matrix has rank 0.
    """
    A = np.asarray(A, dtype=object)
    if A.size == 0:
        return 0
    return len(row_echelon(A)[1])


def inverse(A):
    """ Exact inverse of a square rational matrix

    Raises
    ------
    LinearAlgebraError
        If `A` is not square or is singular.
    """
    A = as_fraction_array(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise LinearAlgebraError('can only invert square matrices, got shape %s'
                                 % (A.shape,))
    n = A.shape[0]
    augmented = np.hstack([A, as_fraction_array(np.identity(n, dtype=int))])
    R, pivots = row_echelon(augmented)
    if pivots[:n] != list(range(n)):
        raise LinearAlgebraError('matrix is singular')
    return R[:, n:]


def vector_matrix(v, M):
    """ Exact row vector times matrix, :math:`vM`.
    """
    v = as_fraction_array(v)
    M = as_fraction_array(M)
    if v.shape[0] != M.shape[0]:
        raise LinearAlgebraError('dimension mismatch: %d vs %d'
                                 % (v.shape[0], M.shape[0]))
    return np.array([sum((v[i] * M[i, j] for i in range(M.shape[0])), Fraction(0))
                     for j in range(M.shape[1])], dtype=object)


def determinant(A):
    """ Exact determinant of a square rational matrix.
    """
    R = as_fraction_array(A)
    if R.ndim != 2 or R.shape[0] != R.shape[1]:
        raise LinearAlgebraError('determinant needs a square matrix, got shape %s'
                                 % (R.shape,))
    n = R.shape[0]
    det = Fraction(1)
    for col in range(n):
        nonzero = [i for i in range(col, n) if R[i, col] != 0]
        if not nonzero:
            return Fraction(0)
        pivot = nonzero[0]
        if pivot != col:
            R[[col, pivot]] = R[[pivot, col]]
            det = -det
        det *= R[col, col]
        for i in range(col + 1, n):
            if R[i, col] != 0:
                R[i] = R[i] - (R[i, col] / R[col, col]) * R[col]
    return det
