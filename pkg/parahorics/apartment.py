r"""
Rational points of the apartment :math:`\mathbb{E} = Y(T) \otimes \mathbb{Q}`,
the Weyl alcove, facets and reduction modulo the affine Weyl group.

Points are written in the basis of fundamental coweights. The closed alcove
of a simple factor is

.. math::

   \mathcal{A} = \{x : (x, \alpha_i) \geq 0, \ (x, \alpha_{max}) \leq 1\}

and the alcove of a product is the product of the factor alcoves.
"""
from __future__ import print_function, division, absolute_import

import warnings
from collections import namedtuple
from fractions import Fraction
from itertools import product
from math import floor

import numpy as np

from . import linalg
from .rootsys import (root_system, pairing, pairings, highest_root,
                      reflection_word)

MAX_WALK_STEPS = 1000000

INTERIOR, BOUNDARY, OUTSIDE = 'interior', 'boundary', 'outside'


class ApartmentError(ValueError):
    pass


class WalkLimitError(ApartmentError):
    pass


class AlcoveReductionWarning(UserWarning):
    pass


def parse_fraction(text):
    """ Parse an exact rational written as ``p/q`` or an integer

    Decimal points and exponents are rejected, only exact input is allowed.

    >>> parse_fraction('-3/6')
    Fraction(-1, 2)
    """
    text = str(text).strip()
    if not text or any(c in text for c in '.eE'):
        raise ApartmentError('%r is not an exact fraction p/q' % (text,))
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ApartmentError('%r is not an exact fraction p/q' % (text,))


def format_fraction(q):
    return str(Fraction(q))


class apartment_point(object):

    """
    A rational point of the apartment in fundamental-coweight coordinates.
    """

    def __init__(self, rs, coords):
        if not isinstance(rs, root_system):
            raise ApartmentError('expecting a root_system, got %r' % (rs,))
        coords = tuple(linalg.to_fraction(c) if not isinstance(c, str)
                       else parse_fraction(c) for c in coords)
        if len(coords) != rs.rank:
            raise ApartmentError('%s needs %d coordinates, got %d'
                                 % (rs.name, rs.rank, len(coords)))
        self.rs = rs
        self.coords = coords

    @classmethod
    def zero(klass, rs):
        return klass(rs, [0] * rs.rank)

    @classmethod
    def from_json(klass, rs, data):
        return klass(rs, [parse_fraction(c) for c in data])

    def to_json(self):
        return [format_fraction(c) for c in self.coords]

    def _check_compatible(self, other):
        if not isinstance(other, apartment_point) or other.rs != self.rs:
            raise ApartmentError('points live in different apartments')

    def __add__(self, other):
        self._check_compatible(other)
        return apartment_point(self.rs, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._check_compatible(other)
        return apartment_point(self.rs, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return apartment_point(self.rs, [-a for a in self.coords])

    def __mul__(self, scalar):
        scalar = linalg.to_fraction(scalar)
        return apartment_point(self.rs, [scalar * a for a in self.coords])

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * (1 / linalg.to_fraction(scalar))

    __div__ = __truediv__

    def __eq__(self, other):
        return (isinstance(other, apartment_point) and self.rs == other.rs
                and self.coords == other.coords)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.rs, self.coords))

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __repr__(self):
        return 'apartment_point(%s, [%s])' % (self.rs.name,
                                              ', '.join(self.to_json()))

    @property
    def is_zero(self):
        return not any(self.coords)


def as_point(rs, theta):
    """ Coerce a coordinate sequence or point into an `apartment_point`.
    """
    if isinstance(theta, apartment_point):
        if theta.rs != rs:
            raise ApartmentError('point belongs to %s, not %s'
                                 % (theta.rs.name, rs.name))
        return theta
    return apartment_point(rs, theta)


def alcove_vertices(rs):
    r""" Vertices of the closed Weyl alcove

    For each simple factor these are :math:`0` and
    :math:`\theta_{\alpha} = \alpha^*/c_{\alpha}`; the vertices of a product
    are the Cartesian products of the factor vertices.

    >>> from parahorics.rootsys import build_root_system
    >>> [v.to_json() for v in alcove_vertices(build_root_system('C2'))]
    [['0', '0'], ['1/2', '0'], ['0', '1']]
    """
    per_factor = []
    for f in range(len(rs.factors)):
        sl = rs.factor_slice(f)
        n = sl.stop - sl.start
        local = [tuple(Fraction(0) for _ in range(n))]
        for i in range(n):
            c = int(rs.marks[sl.start + i])
            local.append(tuple(Fraction(int(i == j), c) for j in range(n)))
        per_factor.append(local)
    return [apartment_point(rs, sum(combo, ())) for combo in product(*per_factor)]


def vertex(rs, i):
    r""" The alcove vertex :math:`\theta_{\alpha_i}` of a simple root.
    """
    rs._check_simple(i)
    coords = [Fraction(0)] * rs.rank
    coords[i] = Fraction(1, int(rs.marks[i]))
    return apartment_point(rs, coords)


wall = namedtuple('wall', ['index', 'kind', 'factor', 'simple'])


def walls(rs):
    """ Walls of the alcove: the simple walls of each factor followed by its
    affine wall.
    """
    result = []
    for f in range(len(rs.factors)):
        sl = rs.factor_slice(f)
        for i in range(sl.start, sl.stop):
            result.append(wall(len(result), 'simple', f, i))
        result.append(wall(len(result), 'affine', f, None))
    return result


def wall_slack(rs, theta, w):
    r""" Nonnegative exactly when `theta` is on the alcove side of wall `w`:
    :math:`(\theta, \alpha_i)` for a simple wall and
    :math:`1 - (\theta, \alpha_{max})` for an affine wall.
    """
    if w.kind == 'simple':
        return Fraction(theta[w.simple])
    top, _ = highest_root(rs, w.factor)
    return 1 - pairing(rs, theta, top)


alcove_verdict = namedtuple('alcove_verdict', ['status', 'active_walls',
                                               'violated_walls'])


def in_alcove(rs, theta):
    """ Locate `theta` relative to the closed alcove

    Returns
    -------
    verdict : alcove_verdict
        `status` is one of 'interior', 'boundary' or 'outside';
        `active_walls` are the walls on which `theta` lies and
        `violated_walls` those whose inequality fails.
    """
    theta = as_point(rs, theta)
    active, violated = [], []
    for w in walls(rs):
        slack = wall_slack(rs, theta, w)
        if slack == 0:
            active.append(w)
        elif slack < 0:
            violated.append(w)
    if violated:
        status = OUTSIDE
    elif active:
        status = BOUNDARY
    else:
        status = INTERIOR
    return alcove_verdict(status, tuple(active), tuple(violated))


def _apply_word(rs, word, coords):
    for k in word:
        coords = rs.reflect_coweight(k, coords)
    return coords


class affine_weyl_element(object):

    r"""
    An element :math:`\theta \mapsto w(\theta) + t` of the affine Weyl group.

    Parameters
    ----------
    rs : root_system
    word : sequence of int
        Simple reflections, read left to right: the first letter acts first.
    translation : sequence of int, optional
        Translation in fundamental-coweight coordinates; must lie in the
        coroot lattice.
    """

    def __init__(self, rs, word=(), translation=None):
        self.rs = rs
        self.word = tuple(int(k) for k in word)
        for k in self.word:
            rs._check_simple(k)
        if translation is None:
            translation = [0] * rs.rank
        translation = [linalg.to_fraction(t) for t in translation]
        if len(translation) != rs.rank:
            raise ApartmentError('translation needs %d coordinates' % rs.rank)
        if any(x.denominator != 1 for x in rs.to_coroot_coords(translation)):
            raise ApartmentError('translation %s is not in the coroot lattice'
                                 % [format_fraction(t) for t in translation])
        self.translation = tuple(translation)

    @classmethod
    def identity(klass, rs):
        return klass(rs)

    @classmethod
    def from_coroot_translation(klass, rs, x, word=()):
        return klass(rs, word, rs.from_coroot_coords(x))

    @property
    def translation_coroot_coords(self):
        return tuple(int(x) for x in self.rs.to_coroot_coords(self.translation))

    def apply(self, theta):
        theta = as_point(self.rs, theta)
        coords = _apply_word(self.rs, self.word, theta.coords)
        return apartment_point(self.rs, [c + t for c, t in zip(coords, self.translation)])

    __call__ = apply

    def inverse(self):
        w_inv = self.word[::-1]
        t = _apply_word(self.rs, w_inv, self.translation)
        return affine_weyl_element(self.rs, w_inv, [-x for x in t])

    def compose(self, other):
        """ The element acting as `other` first, then `self`.
        """
        t = _apply_word(self.rs, self.word, other.translation)
        return affine_weyl_element(self.rs, other.word + self.word,
                                   [a + b for a, b in zip(t, self.translation)])

    def linear_part(self):
        """ Matrix of the finite part acting on coweight coordinates.
        """
        cols = [_apply_word(self.rs, self.word,
                            [Fraction(int(i == j)) for j in range(self.rs.rank)])
                for i in range(self.rs.rank)]
        return np.array(cols, dtype=object).T

    @property
    def is_identity(self):
        return (not any(self.translation)
                and (self.linear_part() == np.identity(self.rs.rank)).all())

    def __eq__(self, other):
        return (isinstance(other, affine_weyl_element) and self.rs == other.rs
                and self.translation == other.translation
                and (self.linear_part() == other.linear_part()).all())

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return ('affine_weyl_element(%s, word=%s, translation=%s)'
                % (self.rs.name, list(self.word),
                   [format_fraction(t) for t in self.translation]))


def _walk_bound(rs, theta):
    # hyperplanes separating theta from the open alcove
    return sum(int(floor(abs(p))) + 1
               for p in pairings(rs, theta)[:rs.n_positive]) + 1


def reduce_to_alcove(rs, theta):
    r""" Move `theta` into the closed alcove by alcove walking

    A point outside the alcove is first translated by the coroot lattice
    so that its coroot coordinates lie in ``[0, 1)``; the walk then
    repeatedly reflects in the most violated wall (ties broken by wall
    index), and its length no longer depends on the size of `theta`. A
    simple wall acts by :math:`s_i` and the affine wall of a factor by
    :math:`\theta \mapsto s_{\alpha_{max}}(\theta) + \alpha_{max}^{\vee}`.

    Returns
    -------
    reduced : apartment_point
        A point of the closed alcove.
    g : affine_weyl_element
        With ``g.apply(theta) == reduced``.

    Raises
    ------
    WalkLimitError
        If the walk does not finish within the number of affine root
        hyperplanes separating `theta` from the alcove, which cannot happen
        for a correct walk.
    """
    theta = as_point(rs, theta)
    coords = theta.coords
    word = []
    translation = [Fraction(0)] * rs.rank
    all_walls = walls(rs)
    if any(wall_slack(rs, coords, w) < 0 for w in all_walls):
        # coroot translation first, leaving coroot coordinates in [0, 1)
        shift = [int(floor(x)) for x in rs.to_coroot_coords(coords)]
        translation = [-t for t in rs.from_coroot_coords(shift)]
        coords = [c + t for c, t in zip(coords, translation)]
    affine_data = {}
    for f in range(len(rs.factors)):
        top, _ = highest_root(rs, f)
        affine_data[f] = (top, reflection_word(rs, top),
                          [int(c) for c in rs.coroot(top)])
    limit = min(_walk_bound(rs, coords), MAX_WALK_STEPS)
    steps = 0
    while True:
        worst, worst_slack = None, Fraction(0)
        for w in all_walls:
            slack = wall_slack(rs, coords, w)
            if slack < worst_slack:
                worst, worst_slack = w, slack
        if worst is None:
            break
        if steps >= limit:
            raise WalkLimitError('alcove walk for %s exceeded %d steps'
                                 % (theta, limit))
        if worst.kind == 'simple':
            k = worst.simple
            coords = rs.reflect_coweight(k, coords)
            translation = rs.reflect_coweight(k, translation)
            word.append(k)
        else:
            top, top_word, top_coroot = affine_data[worst.factor]
            coords = _reflect_affine(rs, top, top_coroot, coords)
            translation = _reflect_affine(rs, top, top_coroot, translation)
            word.extend(top_word)
        steps += 1
    g = affine_weyl_element(rs, word, translation)
    return apartment_point(rs, coords), g


def _reflect_affine(rs, top, top_coroot, coords):
    p = pairing(rs, coords, top)
    return [Fraction(c) - (p - 1) * v for c, v in zip(coords, top_coroot)]


facet_pair = namedtuple('facet_pair', ['root', 'n'])


class facet(object):

    r"""
    The facet of a point: the affine root hyperplanes through it.

    Attributes
    ----------
    vanishing : tuple of facet_pair
        Pairs :math:`(r, n)` with :math:`(\theta, r) = n`, `r` a root index.
    dimension : int
        :math:`\ell` minus the rank of the span of the vanishing roots.
    """

    def __init__(self, rs, vanishing):
        self.rs = rs
        self.vanishing = tuple(facet_pair(int(r), int(n)) for r, n in vanishing)
        roots = [rs.roots[r] for r, _ in self.vanishing]
        self.dimension = rs.rank - (linalg.rank(np.array(roots, dtype=object))
                                    if roots else 0)

    @property
    def roots(self):
        return tuple(r for r, _ in self.vanishing)

    @property
    def is_vertex(self):
        return self.dimension == 0

    def __eq__(self, other):
        return (isinstance(other, facet) and self.rs == other.rs
                and set(self.vanishing) == set(other.vanishing))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.rs, frozenset(self.vanishing)))

    def __repr__(self):
        return 'facet(%s, dimension=%d, %d vanishing roots)' % (
            self.rs.name, self.dimension, len(self.vanishing))


def facet_of(rs, theta):
    """ The facet containing `theta`.
    """
    theta = as_point(rs, theta)
    return facet(rs, [(i, p) for i, p in enumerate(pairings(rs, theta))
                      if p.denominator == 1])


def facet_interior_point(rs, omega):
    """ A point in general position for a finite set of points

    The barycenter of `omega`, which lies in the smallest facet whose
    closure contains `omega`.
    """
    omega = [as_point(rs, theta) for theta in omega]
    if not omega:
        raise ApartmentError('cannot take a point in general position of an empty set')
    total = omega[0]
    for theta in omega[1:]:
        total = total + theta
    return total / len(omega)


def barycenter(rs):
    """ Barycenter of the alcove, a point of the open alcove.
    """
    return facet_interior_point(rs, alcove_vertices(rs))


def random_alcove_point(rs, random_state=None, max_weight=6, interior=False):
    """ A seeded random rational point of the closed alcove

    Each factor contributes a convex combination of its alcove vertices with
    random integer weights in ``[0, max_weight]`` (``[1, max_weight]`` if
    `interior`).

    Parameters
    ----------
    rs : root_system
    random_state : np.random.RandomState, optional
        Defaults to numpy's global random state.
    """
    rng = np.random if random_state is None else random_state
    low = 1 if interior else 0
    coords = []
    for f in range(len(rs.factors)):
        sl = rs.factor_slice(f)
        n = sl.stop - sl.start
        weights = [int(w) for w in rng.randint(low, max_weight + 1, size=n + 1)]
        if not any(weights):
            weights[int(rng.randint(0, n + 1))] = 1
        total = sum(weights)
        # weights[0] sits on the vertex 0
        coords.extend(Fraction(weights[i + 1], total * int(rs.marks[sl.start + i]))
                      for i in range(n))
    return apartment_point(rs, coords)


def reduce_with_notice(rs, theta):
    """ Reduce `theta` to the alcove, warning if it was outside.
    """
    theta = as_point(rs, theta)
    if in_alcove(rs, theta).status == OUTSIDE:
        reduced, _ = reduce_to_alcove(rs, theta)
        warnings.warn('%s lies outside the alcove, using %s'
                      % (theta.to_json(), reduced.to_json()),
                      AlcoveReductionWarning)
        return reduced
    return theta
