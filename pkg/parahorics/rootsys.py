r"""
Root data of semisimple simply connected groups.

A `root_system` is a finite product of simple types A--G. Roots are stored as
integer vectors in simple-root coordinates and coroots as integer vectors in
fundamental-coweight coordinates, so that the canonical pairing of a
coweight with a root is a plain dot product.

The Cartan matrix follows Bourbaki's numbering of the simple roots with

.. math::

   a_{ij} = \langle \alpha_i^{\vee}, \alpha_j \rangle

so that row :math:`i` of the Cartan matrix is the coroot
:math:`\alpha_i^{\vee}` written in the basis :math:`\{\alpha_j^*\}`.
"""
from __future__ import print_function, division, absolute_import

import re
from collections import namedtuple
from fractions import Fraction
from math import factorial

import numpy as np

from .linalg import determinant, inverse, vector_matrix

VALID_RANKS = {'A': lambda n: n >= 1,
               'B': lambda n: n >= 2,
               'C': lambda n: n >= 2,
               'D': lambda n: n >= 3,
               'E': lambda n: n in (6, 7, 8),
               'F': lambda n: n == 4,
               'G': lambda n: n == 2}

_TYPE_RE = re.compile(r'^([A-Ga-g])(\d+)$')


class RootSystemError(ValueError):
    pass


root_ref = namedtuple('root_ref', ['index', 'sign', 'coords'])


def parse_type(text):
    """ Parse a TYPE string such as ``A2``, ``G2`` or ``A1xA1``

    Parameters
    ----------
    text : str
        Simple types written as letter followed by rank, products joined
        by ``x``.

    Returns
    -------
    factors : list of (str, int)
    """
    if not isinstance(text, str) or not text.strip():
        raise RootSystemError('empty root system type %r' % (text,))
    factors = []
    for piece in text.strip().split('x'):
        match = _TYPE_RE.match(piece.strip())
        if match is None:
            raise RootSystemError("cannot parse simple type %r in %r" % (piece, text))
        factors.append((match.group(1).upper(), int(match.group(2))))
    for letter, rank in factors:
        _check_simple_type(letter, rank)
    return factors


def _check_simple_type(letter, rank):
    if letter not in VALID_RANKS:
        raise RootSystemError('unknown simple type %r' % (letter,))
    if not isinstance(rank, (int, np.integer)) or not VALID_RANKS[letter](rank):
        raise RootSystemError('%s%s is not a valid simple type' % (letter, rank))


def cartan_matrix(letter, rank):
    """ Cartan matrix of a simple type in Bourbaki numbering

    Parameters
    ----------
    letter : str
        One of 'A', ..., 'G'.
    rank : int

    Returns
    -------
    C : ndarray
        Integer array with ``C[i, j]`` the pairing of the i-th simple
        coroot with the j-th simple root.
    """
    _check_simple_type(letter, rank)
    n = rank
    C = 2 * np.identity(n, dtype=int)

    def link(i, j):
        C[i, j] = C[j, i] = -1

    if letter in 'ABC':
        for i in range(n - 1):
            link(i, i + 1)
        if letter == 'B':
            C[n - 1, n - 2] = -2
        elif letter == 'C':
            C[n - 2, n - 1] = -2
    elif letter == 'D':
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif letter == 'E':
        for i, j in [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]:
            link(i, j)
        for i in range(5, n - 1):
            link(i, i + 1)
    elif letter == 'F':
        for i in range(3):
            link(i, i + 1)
        C[2, 1] = -2
    elif letter == 'G':
        C[0, 1] = -3
        C[1, 0] = -1
    return C


def expected_root_count(letter, rank):
    """ Closed-form number of roots of a simple type.
    """
    n = rank
    if letter == 'A':
        return n * (n + 1)
    if letter in 'BC':
        return 2 * n ** 2
    if letter == 'D':
        return 2 * n * (n - 1)
    return {('E', 6): 72, ('E', 7): 126, ('E', 8): 240,
            ('F', 4): 48, ('G', 2): 12}[(letter, n)]


def weyl_group_order(rs):
    r""" Order of the finite Weyl group, computed from the root data.

    For each simple factor of rank :math:`\ell` with marks :math:`m_i` and
    Cartan matrix :math:`C`,

    .. math::

        |W| = \ell! \, \prod_i m_i \, \det C

    where :math:`\det C` is the index of the coroot lattice in the
    coweight lattice. The order of a product is the product of the orders.
    """
    order = 1
    for f, (_, n) in enumerate(rs.factors):
        sl = rs.factor_slice(f)
        order *= (factorial(n) * int(np.prod(rs.marks[sl]))
                  * int(determinant(rs.cartan[sl, sl])))
    return order


class root_system(object):

    """
    Immutable root datum of a semisimple simply connected group.

    Attributes
    ----------
    factors : tuple of (str, int)
    rank : int
        Number of simple roots.
    cartan : ndarray
        Block diagonal Cartan matrix.
    roots : ndarray
        Shape ``(|R|, rank)``, simple-root coordinates. Positive roots come
        first, ordered by height then lexicographically (simple roots in
        order), followed by their negatives in the same order.
    coroots : ndarray
        Shape ``(|R|, rank)``, fundamental-coweight coordinates.
    marks : ndarray
        Concatenated highest-root coefficients of the factors.
    dim_g : int
        Dimension of the group.
    """

    def __init__(self, factors):
        factors = tuple((str(letter).upper(), int(rank)) for letter, rank in factors)
        if not factors:
            raise RootSystemError('a root system needs at least one simple factor')
        for letter, rank in factors:
            _check_simple_type(letter, rank)
        self.factors = factors

        offsets = np.cumsum([0] + [rank for _, rank in factors])
        self.offsets = tuple(int(o) for o in offsets)
        self.rank = self.offsets[-1]

        C = np.zeros((self.rank, self.rank), dtype=int)
        for f, (letter, rank) in enumerate(factors):
            sl = self.factor_slice(f)
            C[sl, sl] = cartan_matrix(letter, rank)
        self.cartan = C
        self._cartan_inverse = inverse(C)

        positive, coroot_of = self._reflection_closure()
        positive.sort(key=lambda r: (sum(r), tuple(-c for c in r)))
        roots = positive + [tuple(-c for c in r) for r in positive]
        self.roots = np.array(roots, dtype=int).reshape((-1, self.rank))
        self.coroots = np.array([coroot_of[r] for r in roots],
                                dtype=int).reshape((-1, self.rank))
        self.n_positive = len(positive)
        self._index = dict((r, i) for i, r in enumerate(roots))

        for f, (letter, rank) in enumerate(factors):
            found = len([r for r in positive if any(r[self.factor_slice(f)])])
            if 2 * found != expected_root_count(letter, rank):
                raise RootSystemError('reflection closure of %s%d produced %d roots'
                                      % (letter, rank, 2 * found))

        marks = np.zeros(self.rank, dtype=int)
        self._highest = []
        for f in range(len(factors)):
            sl = self.factor_slice(f)
            in_factor = [i for i in range(self.n_positive)
                         if self.roots[i, sl].any()]
            top = max(in_factor, key=lambda i: self.roots[i].sum())
            self._highest.append(top)
            marks[sl] = self.roots[top, sl]
        self.marks = marks

        for a in (self.cartan, self.roots, self.coroots, self.marks):
            a.setflags(write=False)

    def _reflection_closure(self):
        """
        Close the simple roots (paired with their coroots) under the
        simple reflections. Returns the positive roots and a map from
        every root to its coroot.
        """
        C = self.cartan
        coroot_of = {}
        frontier = []
        for i in range(self.rank):
            r = tuple(int(i == j) for j in range(self.rank))
            coroot_of[r] = tuple(int(c) for c in C[i])
            frontier.append(r)
        while frontier:
            new = []
            for r in frontier:
                rv = np.array(r)
                cv = np.array(coroot_of[r])
                for k in range(self.rank):
                    s_r = rv.copy()
                    s_r[k] -= C[k].dot(rv)
                    s_r = tuple(int(c) for c in s_r)
                    if s_r not in coroot_of:
                        coroot_of[s_r] = tuple(int(c) for c in cv - cv[k] * C[k])
                        new.append(s_r)
            frontier = new
        positive = [r for r in coroot_of if min(r) >= 0]
        return positive, coroot_of

    @property
    def dim_g(self):
        return self.roots.shape[0] + self.rank

    @property
    def n_roots(self):
        return self.roots.shape[0]

    @property
    def positive_indices(self):
        return range(self.n_positive)

    @property
    def negative_indices(self):
        return range(self.n_positive, self.n_roots)

    def factor_slice(self, f):
        if not 0 <= f < len(self.factors):
            raise RootSystemError('factor %r out of range for %s' % (f, self.name))
        return slice(self.offsets[f], self.offsets[f + 1])

    def factor_of(self, i):
        """ Index of the simple factor containing simple root `i`.
        """
        self._check_simple(i)
        for f in range(len(self.factors)):
            if self.offsets[f] <= i < self.offsets[f + 1]:
                return f

    def _check_simple(self, i):
        if not isinstance(i, (int, np.integer)) or not 0 <= i < self.rank:
            raise RootSystemError('%r is not a simple root index of %s (rank %d)'
                                  % (i, self.name, self.rank))

    @property
    def name(self):
        return 'x'.join('%s%d' % f for f in self.factors)

    def index_of(self, r):
        """ Resolve a root given as an index, a `root_ref` or coordinates.
        """
        if isinstance(r, root_ref):
            return r.index
        if isinstance(r, (int, np.integer)):
            if not 0 <= r < self.n_roots:
                raise RootSystemError('root index %d out of range' % r)
            return int(r)
        key = tuple(int(c) for c in r)
        if key not in self._index:
            raise RootSystemError('%s is not a root of %s' % (list(key), self.name))
        return self._index[key]

    def root(self, r):
        i = self.index_of(r)
        return root_ref(i, 1 if i < self.n_positive else -1,
                        tuple(int(c) for c in self.roots[i]))

    def negative(self, r):
        """ Index of the negative of root `r`.
        """
        i = self.index_of(r)
        return (i + self.n_positive) % self.n_roots

    def coroot(self, r):
        return self.coroots[self.index_of(r)]

    def simple_index(self, i):
        """ Index into `roots` of the i-th simple root.
        """
        self._check_simple(i)
        return self._index[tuple(int(i == j) for j in range(self.rank))]

    def reflect_root(self, k, r):
        """ Simple reflection :math:`s_k` applied to a root, as coordinates.
        """
        self._check_simple(k)
        rv = np.array(self.roots[self.index_of(r)])
        rv[k] -= self.cartan[k].dot(rv)
        return rv

    def reflect_coweight(self, k, theta):
        r""" Simple reflection on a coweight,
        :math:`\theta \mapsto \theta - (\theta, \alpha_k) \alpha_k^{\vee}`.
        """
        self._check_simple(k)
        theta = [Fraction(t) for t in self._check_coweight(theta)]
        return np.array([t - theta[k] * int(c)
                         for t, c in zip(theta, self.cartan[k])], dtype=object)

    def to_coroot_coords(self, theta):
        """ Coordinates of a coweight in the basis of simple coroots.
        """
        return vector_matrix(self._check_coweight(theta), self._cartan_inverse)

    def from_coroot_coords(self, x):
        """ Fundamental-coweight coordinates of a coroot-lattice combination.
        """
        return vector_matrix(self._check_coweight(x), self.cartan)

    def _check_coweight(self, theta):
        theta = getattr(theta, 'coords', theta)
        theta = np.asarray(theta, dtype=object)
        if theta.shape != (self.rank,):
            raise RootSystemError('expecting %d coordinates, got %d'
                                  % (self.rank, theta.size))
        return theta

    def __eq__(self, other):
        return isinstance(other, root_system) and self.factors == other.factors

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        return 'root_system(%r)' % (list(self.factors),)


def build_root_system(spec):
    """ Build a root system from a list of (type, rank) pairs or a TYPE string

    >>> rs = build_root_system([('A', 2)])
    >>> rs.n_roots, rs.dim_g, rs.marks.tolist()
    (6, 8, [1, 1])
    """
    if isinstance(spec, str):
        spec = parse_type(spec)
    return root_system(spec)


def pairing(rs, theta, r):
    r""" Canonical pairing :math:`(\theta, r)` of a rational coweight with a root

    Parameters
    ----------
    rs : root_system
    theta : sequence of rationals or apartment_point
        Coordinates in the fundamental-coweight basis.
    r : int, root_ref or sequence of int
        The root.

    Returns
    -------
    value : Fraction
    """
    theta = rs._check_coweight(theta)
    coords = rs.roots[rs.index_of(r)]
    return sum((Fraction(t) * int(c) for t, c in zip(theta, coords)), Fraction(0))


def pairings(rs, theta):
    """ Pairings of `theta` with every root, in root order.
    """
    theta = [Fraction(t) for t in rs._check_coweight(theta)]
    return [sum((t * int(c) for t, c in zip(theta, row)), Fraction(0))
            for row in rs.roots]


def highest_root(rs, factor=0):
    """ Highest root of a simple factor and its marks

    Returns
    -------
    root : root_ref
    marks : ndarray
        Coefficients :math:`c_{\\alpha}` of the highest root on the simple
        roots of that factor.
    """
    sl = rs.factor_slice(factor)
    top = rs.root(rs._highest[factor])
    return top, np.array(rs.roots[top.index, sl])


def flag_dimension(rs, I):
    """ Dimension of the flag variety :math:`G/P_I`

    The number of positive roots with a nonzero coefficient on some
    simple root outside `I`.
    """
    I = set(I)
    for i in I:
        rs._check_simple(i)
    outside = [j for j in range(rs.rank) if j not in I]
    return int(sum(1 for i in rs.positive_indices
                   if rs.roots[i, outside].any()))


def reflection_word(rs, r):
    """ A word in simple reflections realising the reflection in root `r`

    The word is read left to right: the first letter is applied first.
    """
    i = rs.index_of(r)
    if i >= rs.n_positive:
        i = rs.negative(i)
    coords = rs.roots[i]
    if coords.sum() == 1:
        return (int(np.nonzero(coords)[0][0]),)
    for k in range(rs.rank):
        if rs.cartan[k].dot(coords) > 0:
            return (k,) + reflection_word(rs, rs.reflect_root(k, i)) + (k,)
    raise RootSystemError('no descent found for root %s' % (list(coords),))


def hyperspecial_count(letter, rank):
    """ Number of hyperspecial alcove vertices of a simple type, counting 0.
    """
    rs = build_root_system([(letter, rank)])
    return 1 + int((rs.marks == 1).sum())
