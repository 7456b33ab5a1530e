r"""
Dimension formulas for spaces of representations of Fuchsian groups and for
moduli of parahoric torsors.

For a weight :math:`\theta` of the closed alcove, :math:`e(\theta)` is the
rank of :math:`Id - Ad\, \rho_{\theta}(\gamma)` on the compact Lie algebra,

.. math::

   e(\theta) = \dim G - \ell - \#\{r \in R : (\theta, r) \in \mathbb{Z}\},

and with genus `g` and weights :math:`\theta_1, \dots, \theta_m`

.. math::

   \dim_{\mathbb{R}} R^{\tau} = (2g - 1) \dim G + \sum_i e(\theta_i), \qquad
   \dim_{\mathbb{C}} M = \dim G \, (g - 1) + \frac{1}{2} \sum_i e(\theta_i).

Everything here is exact except `adjoint_rank_oracle`, which checks
:math:`e(\theta)` numerically on explicit matrix Lie algebras.
"""
from __future__ import print_function, division, absolute_import

import warnings
from fractions import Fraction

import numpy as np
from scipy import linalg as sla

from .rootsys import build_root_system, flag_dimension, pairings
from .apartment import as_point, reduce_with_notice, vertex
from .parahoric import contains, closed_fiber_parabolic
from .localtype import local_type, isotropy_order

ORACLE_TOLERANCE = 1.0e-9


class DimensionError(ValueError):
    pass


class GenusWarning(UserWarning):
    pass


def e_theta(rs, theta):
    """ Rank of ``Id - Ad rho_theta(gamma)``: the number of roots pairing
    non-integrally with `theta`. Points outside the alcove are reduced first.

    >>> from parahorics.rootsys import build_root_system
    >>> e_theta(build_root_system('C2'), ['1/2', 0])
    4
    """
    theta = reduce_with_notice(rs, theta)
    return sum(1 for p in pairings(rs, theta) if p.denominator != 1)


def centralizer_dim(rs, theta):
    """ Dimension of the centralizer of ``rho_theta(gamma)``.
    """
    return rs.dim_g - e_theta(rs, theta)


def _coefficient_scan(rs, i):
    rs._check_simple(i)
    return rs.roots[:, i]


def mu(rs, i):
    r""" Number of positive roots whose coefficient on the simple root `i`
    is the mark :math:`c_{\alpha_i}`.
    """
    coeffs = _coefficient_scan(rs, i)[:rs.n_positive]
    return int((coeffs == rs.marks[i]).sum())


def nu(rs, i):
    """ Number of negative roots not involving the simple root `i`, the
    dimension of ``P_alpha / B``.
    """
    coeffs = _coefficient_scan(rs, i)[rs.n_positive:]
    return int((coeffs == 0).sum())


def _maximal_parabolic(rs, i):
    return [j for j in range(rs.rank) if j != i]


def e_vertex(rs, i):
    r""" :math:`e(\theta_{\alpha})` for the vertex of the simple root `i`

    Evaluated as :math:`\dim G - 2\mu - 2\nu - \ell`, as
    :math:`2(\dim G/P_{\alpha} - \mu)` and by counting roots; the three must
    agree.
    """
    first = rs.dim_g - 2 * mu(rs, i) - 2 * nu(rs, i) - rs.rank
    second = 2 * (flag_dimension(rs, _maximal_parabolic(rs, i)) - mu(rs, i))
    counted = e_theta(rs, vertex(rs, i))
    if not first == second == counted:
        raise DimensionError('e(theta_%d) disagrees for %s: %d, %d, %d'
                             % (i, rs.name, first, second, counted))
    return first


def mu_nu_table(rs):
    """ Per simple root: mark, mu, nu, dim G/P_alpha and e(theta_alpha).
    """
    rows = []
    for i in range(rs.rank):
        rows.append({'simple_root': i,
                     'mark': int(rs.marks[i]),
                     'mu': mu(rs, i),
                     'nu': nu(rs, i),
                     'dim_G_mod_P': flag_dimension(rs, _maximal_parabolic(rs, i)),
                     'e': e_vertex(rs, i)})
    return rows


def weil_h1_dim(d, g, h0, e_list):
    r""" Real dimension of :math:`H^1(\pi, \rho)` for a unitary representation
    of dimension `d`: :math:`2d(g-1) + 2 h^0 + \sum e_{\nu}`.
    """
    for name, value in [('d', d), ('g', g), ('h0', h0)]:
        if int(value) != value:
            raise DimensionError('%s must be an integer, got %r' % (name, value))
    if d < 1 or g < 0 or h0 < 0:
        raise DimensionError('need d >= 1, g >= 0, h0 >= 0; got %r, %r, %r'
                             % (d, g, h0))
    if any(e < 0 for e in e_list):
        raise DimensionError('ranks e must be nonnegative, got %r' % (list(e_list),))
    return 2 * d * (g - 1) + 2 * h0 + sum(e_list)


class moduli_spec(object):

    """
    Genus and marked-point weights, input to the moduli dimension formulas.

    Weights outside the alcove are reduced, with a warning. Genus below 2
    is accepted with a warning and recorded in `genus_warning`.
    """

    def __init__(self, rs, genus, marked_weights=()):
        if int(genus) != genus or genus < 0:
            raise DimensionError('genus must be a nonnegative integer, got %r' % (genus,))
        self.rs = rs
        self.genus = int(genus)
        self.marked_weights = tuple(reduce_with_notice(rs, as_point(rs, theta))
                                    for theta in marked_weights)
        self.genus_warning = self.genus < 2
        if self.genus_warning:
            warnings.warn('genus %d < 2: dimension formulas are evaluated, '
                          'but the moduli space need not exist' % self.genus,
                          GenusWarning)

    @property
    def m(self):
        return len(self.marked_weights)

    def e_values(self):
        return [e_theta(self.rs, theta) for theta in self.marked_weights]

    def __repr__(self):
        return 'moduli_spec(%s, genus=%d, %d marked points)' % (
            self.rs.name, self.genus, self.m)


def rep_space_dim(spec):
    """ Real dimension of the space of irreducible representations of
    the given local types.
    """
    return (2 * spec.genus - 1) * spec.rs.dim_g + sum(spec.e_values())


def moduli_dim(spec):
    """ Complex dimension of the moduli space.
    """
    e = spec.e_values()
    if any(x % 2 for x in e):
        raise DimensionError('odd e(theta) in %r' % (e,))
    return spec.rs.dim_g * (spec.genus - 1) + sum(e) // 2


def fuchsian_signature(spec):
    """ Signature ``(g; n_1, ..., n_m)`` with `n_i` the least isotropy
    order of the i-th weight.
    """
    return (spec.genus, tuple(isotropy_order(spec.rs, theta)
                              for theta in spec.marked_weights))


def orbifold_euler_characteristic(signature):
    """ ``2 - 2g - sum(1 - 1/n_i)``, exactly.
    """
    g, orders = signature
    return 2 - 2 * g - sum((1 - Fraction(1, n) for n in orders), Fraction(0))


def is_hyperbolic(signature):
    """ Whether a Fuchsian group of this signature uniformizes the orbifold.
    """
    return orbifold_euler_characteristic(signature) < 0


class dimension_report(object):

    """
    All dimension data of a `moduli_spec`.

    Attributes
    ----------
    e_values : list of int
    rep_space_dim : int
    moduli_dim : int
    residue : int
        ``rep_space_dim - dim G - 2 moduli_dim``, always 0.
    signature : tuple
    euler_characteristic : Fraction
    """

    def __init__(self, spec, with_mu_nu=False):
        self.spec = spec
        self.e_values = spec.e_values()
        self.rep_space_dim = rep_space_dim(spec)
        self.moduli_dim = moduli_dim(spec)
        self.residue = self.rep_space_dim - spec.rs.dim_g - 2 * self.moduli_dim
        if self.residue != 0:
            raise DimensionError('dimension bookkeeping residue %d != 0' % self.residue)
        self.signature = fuchsian_signature(spec)
        self.euler_characteristic = orbifold_euler_characteristic(self.signature)
        self.mu_nu = mu_nu_table(spec.rs) if with_mu_nu else None

    def to_json(self):
        result = {'type': self.spec.rs.name,
                  'dim_g': self.spec.rs.dim_g,
                  'genus': self.spec.genus,
                  'genus_warning': self.spec.genus_warning,
                  'weights': [theta.to_json() for theta in self.spec.marked_weights],
                  'e': list(self.e_values),
                  'rep_space_dim': self.rep_space_dim,
                  'moduli_dim': self.moduli_dim,
                  'residue': self.residue,
                  'signature': {'genus': self.signature[0],
                                'orders': list(self.signature[1])},
                  'euler_characteristic': str(self.euler_characteristic),
                  'hyperbolic': self.euler_characteristic < 0}
        if self.mu_nu is not None:
            result['mu_nu'] = self.mu_nu
        return result


def hecke_fiber_dim(rs, lower, upper):
    r""" Dimension of the fibre of the Hecke map from torsors of `lower` to
    torsors of `upper`, i.e. of ``upper / lower``

    For standard parahorics ``ev^{-1}(P_I) \subset ev^{-1}(P_J)`` this is
    ``dim G/P_I - dim G/P_J``; in general it is the number of root group
    steps :math:`\sum_r (m_r(lower) - m_r(upper))`.
    """
    if not contains(rs, upper, lower):
        raise DimensionError('%r does not contain %r' % (upper, lower))
    steps = int((lower.exponents - upper.exponents).sum())
    if lower.is_standard and upper.is_standard:
        I = closed_fiber_parabolic(rs, lower.theta)
        J = closed_fiber_parabolic(rs, upper.theta)
        dim = flag_dimension(rs, I) - flag_dimension(rs, J)
        if not I <= J or dim != steps:
            raise DimensionError('inconsistent standard parahorics %s, %s'
                                 % (sorted(I), sorted(J)))
        return dim
    return steps


# Defining representations: diagonal entry k of the torus element with
# coroot coordinates x is exp(2 pi i <row k, x>).

_DEFINING_WEIGHTS = {('A', 1): [[1], [-1]],
                     ('A', 2): [[1, 0], [-1, 1], [0, -1]],
                     ('C', 2): [[1, 0], [-1, 1], [-1, 0], [1, -1]]}


def _lie_algebra_basis(letter, rank):
    """ Basis of the complex Lie algebra in its defining representation,
    as the null space of its linear defining conditions on gl(n).
    """
    n = len(_DEFINING_WEIGHTS[(letter, rank)])
    units = np.identity(n * n).reshape((n * n, n, n))
    if letter == 'A':
        conditions = np.array([[np.trace(E) for E in units]])
    else:
        J = np.zeros((n, n))
        J[:n // 2, n // 2:] = np.identity(n // 2)
        J[n // 2:, :n // 2] = -np.identity(n // 2)
        conditions = np.array([(E.T.dot(J) + J.dot(E)).ravel() for E in units]).T
    basis = sla.null_space(conditions)
    return basis.T.reshape((-1, n, n))


def adjoint_rank_oracle(rs, lt, tol=ORACLE_TOLERANCE):
    r""" Numerical rank of :math:`Id - Ad\, \rho(\gamma)` on an explicit
    matrix Lie algebra

    Builds :math:`\rho(\gamma) = \exp(2 \pi i \Delta / d)` as a diagonal
    matrix in the defining representation of :math:`sl_2`, :math:`sl_3` or
    :math:`sp_4`, the matrix of conjugation by it in a basis of the Lie
    algebra, and counts singular values of :math:`Id - Ad` above `tol`.

    Parameters
    ----------
    rs : root_system or str
        One of A1, A2, C2.
    lt : local_type
    """
    if isinstance(rs, str):
        rs = build_root_system(rs)
    if len(rs.factors) != 1 or rs.factors[0] not in _DEFINING_WEIGHTS:
        raise DimensionError('no explicit matrix model for %s' % rs.name)
    if not isinstance(lt, local_type) or lt.rs != rs:
        raise DimensionError('local type does not belong to %s' % rs.name)
    W = np.array(_DEFINING_WEIGHTS[rs.factors[0]], dtype=float)
    x = np.array(lt.delta, dtype=float) / lt.d
    g = np.exp(2j * np.pi * W.dot(x))

    basis = _lie_algebra_basis(*rs.factors[0])
    if basis.shape[0] != rs.dim_g:
        raise DimensionError('matrix model of %s has dimension %d'
                             % (rs.name, basis.shape[0]))
    B = basis.reshape((basis.shape[0], -1)).T.astype(complex)
    conjugated = np.array([(g[:, None] * E / g[None, :]).ravel() for E in basis]).T
    ad = sla.lstsq(B, conjugated)[0]
    sv = sla.svdvals(np.identity(ad.shape[0]) - ad)
    return int((sv > tol).sum())
