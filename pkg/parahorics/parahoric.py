r"""
Parahoric subgroups of :math:`G(K)` through their filtration exponents.

The parahoric subgroup attached to a finite set :math:`\Omega` of apartment
points is generated by :math:`T(A)` and the root groups
:math:`U_r(z^{m_r} A)` with

.. math::

   m_r(\Omega) = -\lfloor \min_{\theta \in \Omega} (\theta, r) \rfloor.

The torus part is common to every descriptor, so a descriptor stores only
the exponents, one integer per root in the root order of `root_system`.
"""
from __future__ import print_function, division, absolute_import

from math import floor

import numpy as np

from .rootsys import pairings, hyperspecial_count, VALID_RANKS
from .apartment import (as_point, facet_of, alcove_vertices, barycenter,
                        reduce_with_notice, in_alcove, OUTSIDE)


class ParahoricError(ValueError):
    pass


def bounds_exponents(rs, omega):
    r""" Filtration exponents :math:`m_r(\Omega)` of a finite set of points

    Parameters
    ----------
    rs : root_system
    omega : sequence of apartment_point
        Nonempty.

    Returns
    -------
    exponents : ndarray
        Integer array, one entry per root.

    >>> from parahorics.rootsys import build_root_system
    >>> rs = build_root_system('A1')
    >>> bounds_exponents(rs, [[0], [1]]).tolist()
    [0, 1]
    """
    omega = [as_point(rs, theta) for theta in omega]
    if not omega:
        raise ParahoricError('bounds_exponents needs a nonempty set of points')
    table = np.array([pairings(rs, theta) for theta in omega], dtype=object)
    return np.array([-int(floor(min(column))) for column in table.T], dtype=int)


class parahoric_descriptor(object):

    """
    The computable avatar of a parahoric subgroup: its exponents, facet and
    classification flags.

    Parameters
    ----------
    rs : root_system
    theta : apartment_point
        The defining point, reduced to the closed alcove.
    """

    def __init__(self, rs, theta):
        self.rs = rs
        self.theta = as_point(rs, theta)
        self.exponents = bounds_exponents(rs, [self.theta])
        self.exponents.setflags(write=False)
        self.facet = facet_of(rs, self.theta)
        self.is_maximal = self.facet.dimension == 0
        self.is_hyperspecial = _hyperspecial_point(rs, self.theta)
        self.is_standard = bool((self.exponents >= 0).all())

    @property
    def flags(self):
        return {'maximal': self.is_maximal,
                'hyperspecial': self.is_hyperspecial,
                'standard': self.is_standard}

    def m(self, r):
        return int(self.exponents[self.rs.index_of(r)])

    def to_json(self):
        return {'theta': self.theta.to_json(),
                'exponents': [{'root': [int(c) for c in self.rs.roots[i]],
                               'm': int(m)}
                              for i, m in enumerate(self.exponents)],
                'flags': self.flags}

    def __eq__(self, other):
        return (isinstance(other, parahoric_descriptor) and self.rs == other.rs
                and (self.exponents == other.exponents).all())

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.rs, tuple(self.exponents)))

    def __repr__(self):
        return 'parahoric_descriptor(%s, theta=[%s])' % (
            self.rs.name, ', '.join(self.theta.to_json()))


def descriptor(rs, theta):
    """ Parahoric descriptor of a point, reduced to the alcove first.

    >>> from parahorics.rootsys import build_root_system
    >>> d = descriptor(build_root_system('A1'), [1])
    >>> d.exponents.tolist(), d.is_hyperspecial
    ([-1, 1], True)
    """
    return parahoric_descriptor(rs, reduce_with_notice(rs, theta))


def iwahori(rs):
    """ The Iwahori descriptor, taken at the alcove barycenter.
    """
    return parahoric_descriptor(rs, barycenter(rs))


def _check_same_system(d1, d2):
    if d1.rs != d2.rs:
        raise ParahoricError('descriptors belong to %s and %s'
                             % (d1.rs.name, d2.rs.name))


def contains(rs, d1, d2):
    """ Whether the group of `d1` contains the group of `d2`

    Compares generators root by root: true when ``m_r(d1) <= m_r(d2)`` for
    every root. This is sufficient in general and exact for descriptors of
    points of the closed alcove.
    """
    _check_same_system(d1, d2)
    if d1.rs != rs:
        raise ParahoricError('descriptors do not belong to %s' % rs.name)
    return bool((d1.exponents <= d2.exponents).all())


def _require_alcove(rs, theta):
    theta = as_point(rs, theta)
    if in_alcove(rs, theta).status == OUTSIDE:
        raise ParahoricError('%s is not in the closed alcove; reduce it first'
                             % (theta.to_json(),))
    return theta


def is_subgroup_of_GA(rs, theta):
    r""" Whether :math:`\mathcal{P}_{\theta}(K) \subset G(A)`, i.e. all
    :math:`m_r(\theta) \geq 0`.
    """
    theta = _require_alcove(rs, theta)
    return bool((bounds_exponents(rs, [theta]) >= 0).all())


def closed_fiber_parabolic(rs, theta):
    """ Simple roots `I` with ``ev^{-1}(P_I)`` the standard parahoric of `theta`

    Raises
    ------
    ParahoricError
        If the parahoric of `theta` is not contained in ``G(A)``.
    """
    theta = _require_alcove(rs, theta)
    if not is_subgroup_of_GA(rs, theta):
        raise ParahoricError('%s does not define a standard parahoric'
                             % (theta.to_json(),))
    return frozenset(i for i in range(rs.rank) if theta[i] == 0)


def levi_roots(rs, theta):
    r""" Roots with :math:`(\theta, r) = 0`, the roots of the Levi subgroup.
    """
    theta = as_point(rs, theta)
    return frozenset(i for i, p in enumerate(pairings(rs, theta)) if p == 0)


def centralizer_roots(rs, theta):
    r""" Roots with :math:`(\theta, r) \in \mathbb{Z}`

    With :math:`T` these generate the centralizer of the torus element
    :math:`\exp(2 \pi i \theta)`. For standard points this is `levi_roots`.
    """
    theta = as_point(rs, theta)
    return frozenset(i for i, p in enumerate(pairings(rs, theta))
                     if p.denominator == 1)


def reductive_quotient_roots(d):
    """ Roots of the reductive quotient of the closed fibre of `d`:
    those with ``m_r + m_{-r} = 0``.
    """
    rs = d.rs
    return frozenset(i for i in range(rs.n_roots)
                     if d.exponents[i] + d.exponents[rs.negative(i)] == 0)


def is_maximal(rs, theta):
    theta = _require_alcove(rs, theta)
    return facet_of(rs, theta).dimension == 0


def _hyperspecial_point(rs, theta):
    if in_alcove(rs, theta).status == OUTSIDE:
        return False
    for f in range(len(rs.factors)):
        local = theta.coords[rs.factor_slice(f)]
        nonzero = [i for i, c in enumerate(local) if c != 0]
        if not nonzero:
            continue
        # theta_alpha with c_alpha = 1 is a unit vector
        if len(nonzero) != 1 or local[nonzero[0]] != 1:
            return False
        if rs.marks[rs.offsets[f] + nonzero[0]] != 1:
            return False
    return True


def is_hyperspecial(rs, theta):
    r""" Whether `theta` is, factor by factor, 0 or a vertex
    :math:`\theta_{\alpha}` with :math:`c_{\alpha} = 1`.
    """
    theta = _require_alcove(rs, theta)
    return _hyperspecial_point(rs, theta)


def enumerate_maximal_classes(rs):
    """ Descriptors of all alcove vertices, one per class of maximal
    parahoric subgroups.
    """
    return [parahoric_descriptor(rs, v) for v in alcove_vertices(rs)]


def hyperspecial_table(max_rank=8):
    """ Vertex and hyperspecial counts for every simple type up to `max_rank`

    Returns
    -------
    rows : list of (str, int, int, int)
        (letter, rank, number of alcove vertices, number hyperspecial).
    """
    if max_rank < 1:
        raise ParahoricError('max_rank must be positive, got %r' % (max_rank,))
    rows = []
    for letter in sorted(VALID_RANKS):
        for rank in range(1, max_rank + 1):
            if not VALID_RANKS[letter](rank):
                continue
            rows.append((letter, rank, rank + 1, hyperspecial_count(letter, rank)))
    return rows
