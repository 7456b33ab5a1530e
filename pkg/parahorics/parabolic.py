"""
Parabolic line bundles: degree plus rational weights at marked points.
"""
from __future__ import print_function, division, absolute_import

from fractions import Fraction

from .linalg import to_fraction


class ParabolicError(ValueError):
    pass


class parabolic_line(object):

    """
    A line bundle of integer `degree` with parabolic weights in ``[0, 1]``.

    Tensor products add degrees and concatenate weights.
    """

    def __init__(self, degree, weights=()):
        if int(degree) != degree:
            raise ParabolicError('degree must be an integer, got %r' % (degree,))
        weights = tuple(to_fraction(w) for w in weights)
        for w in weights:
            if not 0 <= w <= 1:
                raise ParabolicError('parabolic weight %s is outside [0, 1]' % w)
        self.degree = int(degree)
        self.weights = weights

    def __add__(self, other):
        return parabolic_line(self.degree + other.degree,
                              self.weights + other.weights)

    def __eq__(self, other):
        return (isinstance(other, parabolic_line) and self.degree == other.degree
                and self.weights == other.weights)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.degree, self.weights))

    def to_json(self):
        return {'degree': self.degree,
                'weights': [str(w) for w in self.weights]}

    def __repr__(self):
        return 'parabolic_line(%d, [%s])' % (self.degree,
                                             ', '.join(str(w) for w in self.weights))


def pardeg(pl):
    """ Parabolic degree, the degree plus the sum of the weights.

    >>> pardeg(parabolic_line(-1, [Fraction(1, 3), Fraction(1, 4)]))
    Fraction(-5, 12)
    """
    return pl.degree + sum(pl.weights, Fraction(0))


def invariant_weights(exponents):
    """ Weights ``a_i / n_i`` of the invariant direct image of a line bundle

    Exponents ``a_i`` are first lifted to ``[0, n_i)``, so every weight
    lies in ``[0, 1)``.

    Parameters
    ----------
    exponents : sequence of (int, int)
        Pairs ``(a_i, n_i)`` with ``n_i >= 1``.
    """
    weights = []
    for a, n in exponents:
        if int(a) != a or int(n) != n:
            raise ParabolicError('exponent pair (%r, %r) must be integers' % (a, n))
        if n == 0:
            raise ParabolicError('isotropy order n must be nonzero')
        if n < 0:
            raise ParabolicError('isotropy order n must be positive, got %d' % n)
        weights.append(Fraction(int(a) % int(n), int(n)))
    return weights


def pardeg_from_cover(deg_downstairs, exponents):
    """ Parabolic degree of the invariant direct image: ``deg + sum a_i/n_i``.
    """
    return pardeg(parabolic_line(deg_downstairs, invariant_weights(exponents)))
