r"""
Local types: the dictionary between local representations and weights.

A homomorphism :math:`\rho` from a cyclic group of order `d` into the torus
is an element :math:`\Delta` of :math:`Y(T)/d \cdot Y(T)`; for simply
connected groups :math:`Y(T)` is the coroot lattice. Its weight is the
apartment point :math:`\theta_{\Delta} = \Delta / d`, whose alcove
representative parametrizes the conjugacy class of :math:`\rho(\gamma)`.
"""
from __future__ import print_function, division, absolute_import

from fractions import Fraction
from functools import reduce
from math import gcd

from .apartment import apartment_point, as_point, reduce_to_alcove


class LocalTypeError(ValueError):
    pass


def _lcm(a, b):
    return a * b // gcd(a, b)


class local_type(object):

    r"""
    A pair :math:`(d, \Delta)` with :math:`\Delta` in the coroot lattice.

    Two local types are equal when they have the same order and their
    :math:`\Delta` agree modulo :math:`d \cdot Y(T)`.

    Parameters
    ----------
    rs : root_system
    d : int
        Order of the isotropy group, positive.
    delta : sequence of int
        Coordinates of :math:`\Delta` in the basis of simple coroots.
    """

    def __init__(self, rs, d, delta):
        if int(d) != d or d < 1:
            raise LocalTypeError('the order d must be a positive integer, got %r' % (d,))
        delta = tuple(delta)
        if len(delta) != rs.rank:
            raise LocalTypeError('delta needs %d coroot coordinates, got %d'
                                 % (rs.rank, len(delta)))
        if any(int(x) != x for x in delta):
            raise LocalTypeError('delta %s is not in the coroot lattice' % (list(delta),))
        self.rs = rs
        self.d = int(d)
        self.delta = tuple(int(x) for x in delta)
        self.theta = apartment_point(rs, rs.from_coroot_coords(self.delta)) / self.d

    @property
    def residues(self):
        """ :math:`\\Delta` modulo `d`, coordinates in ``[0, d)``.
        """
        return tuple(x % self.d for x in self.delta)

    @property
    def signed_residues(self):
        """ :math:`\\Delta` modulo `d`, coordinates in ``(-d/2, d/2]``.
        """
        return tuple(x - self.d if 2 * x > self.d else x for x in self.residues)

    def weight(self):
        return weight_of_local_rep(self.rs, self.d, self.delta)

    def to_json(self):
        return {'d': self.d,
                'delta_coroot_coords': list(self.delta),
                'theta': self.theta.to_json()}

    @classmethod
    def from_json(klass, rs, data):
        return klass(rs, data['d'], data['delta_coroot_coords'])

    def __eq__(self, other):
        return (isinstance(other, local_type) and self.rs == other.rs
                and self.d == other.d and self.residues == other.residues)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.rs, self.d, self.residues))

    def __repr__(self):
        return 'local_type(%s, d=%d, delta=%s)' % (self.rs.name, self.d,
                                                   list(self.delta))


def weight_of_local_rep(rs, d, delta):
    r""" Alcove weight of the local representation :math:`(d, \Delta)`

    >>> from parahorics.rootsys import build_root_system
    >>> weight_of_local_rep(build_root_system('A1'), 4, [1]).to_json()
    ['1/2']
    """
    lt = local_type(rs, d, delta)
    reduced, _ = reduce_to_alcove(rs, lt.theta)
    return reduced


def local_rep_of_weight(rs, theta):
    r""" Local representation of a rational weight with the least order

    `d` is the least positive integer with :math:`d \theta` in the coroot
    lattice, and :math:`\Delta = d \theta`.
    """
    theta = as_point(rs, theta)
    x = rs.to_coroot_coords(theta)
    d = reduce(_lcm, [Fraction(c).denominator for c in x], 1)
    return local_type(rs, d, [Fraction(c) * d for c in x])


def isotropy_order(rs, theta):
    """ Least order of a local representation with weight `theta`.
    """
    return local_rep_of_weight(rs, theta).d


def delta_pairing(rs, lt, r):
    r""" The integer :math:`r(\Delta) = d (\theta, r)`.
    """
    coords = rs.roots[rs.index_of(r)]
    return sum(x * int(rs.cartan[j].dot(coords)) for j, x in enumerate(lt.delta))


def root_group_action(rs, lt, r):
    r""" Exponent of :math:`\zeta` by which :math:`\rho(\gamma)` acts on the
    root group :math:`U_r`, in ``[0, d)``.
    """
    return delta_pairing(rs, lt, r) % lt.d
