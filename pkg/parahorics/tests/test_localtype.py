from fractions import Fraction
from itertools import product

from numpy.testing import assert_equal, assert_raises

from parahorics.rootsys import build_root_system
from parahorics.apartment import in_alcove, OUTSIDE, barycenter
from parahorics.parahoric import centralizer_roots, levi_roots, is_subgroup_of_GA
from parahorics.localtype import (local_type, weight_of_local_rep,
                                  local_rep_of_weight, isotropy_order,
                                  delta_pairing, root_group_action,
                                  LocalTypeError)

F = Fraction

def test_weight_of_local_rep():
    A2 = build_root_system('A2')
    assert_equal(weight_of_local_rep(A2, 1, [0, 0]).to_json(), ['0', '0'])
    A1 = build_root_system('A1')
    assert_equal(weight_of_local_rep(A1, 4, [1]).to_json(), ['1/2'])
    # theta = 1 is already a vertex of the alcove
    assert_equal(weight_of_local_rep(A1, 2, [1]).to_json(), ['1'])
    assert_equal(weight_of_local_rep(A1, 4, [3]).to_json(), ['1/2'])

def test_local_rep_of_weight():
    A2 = build_root_system('A2')
    lt = local_rep_of_weight(A2, [0, 0])
    assert_equal((lt.d, lt.delta), (1, (0, 0)))
    lt = local_rep_of_weight(A2, barycenter(A2))
    assert_equal((lt.d, lt.delta), (3, (1, 1)))
    lt = local_rep_of_weight(build_root_system('A1'), [F(1, 2)])
    assert_equal((lt.d, lt.delta), (4, (1,)))
    lt = local_rep_of_weight(build_root_system('C2'), [F(1, 2), 0])
    assert_equal((lt.d, lt.delta), (2, (1, 1)))
    assert_equal(isotropy_order(build_root_system('G2'), [F(1, 3), 0]), 3)

def test_local_type_equality():
    A1 = build_root_system('A1')
    assert_equal(local_type(A1, 4, [1]), local_type(A1, 4, [5]))
    assert_equal(hash(local_type(A1, 4, [1])), hash(local_type(A1, 4, [-3])))
    assert local_type(A1, 4, [1]) != local_type(A1, 4, [2])
    assert local_type(A1, 4, [1]) != local_type(A1, 8, [2])
    lt = local_type(A1, 6, [5])
    assert_equal(lt.residues, (5,))
    assert_equal(lt.signed_residues, (-1,))
    assert_equal(local_type.from_json(A1, lt.to_json()), lt)

def test_local_type_errors():
    A2 = build_root_system('A2')
    assert_raises(LocalTypeError, local_type, A2, 0, [0, 0])
    assert_raises(LocalTypeError, local_type, A2, -2, [0, 0])
    assert_raises(LocalTypeError, local_type, A2, 3, [1])
    assert_raises(LocalTypeError, local_type, A2, 3, [F(1, 2), 0])

def test_root_group_action():
    A1 = build_root_system('A1')
    lt = local_type(A1, 4, [1])
    assert_equal(delta_pairing(A1, lt, 0), 2)
    assert_equal([root_group_action(A1, lt, i) for i in range(2)], [2, 2])
    trivial = local_type(A1, 1, [0])
    assert_equal([root_group_action(A1, trivial, i) for i in range(2)], [0, 0])

    C2 = build_root_system('C2')
    lt = local_rep_of_weight(C2, [F(1, 2), 0])
    assert_equal(delta_pairing(C2, lt, [2, 1]), 2)
    assert_equal(root_group_action(C2, lt, [2, 1]), 0)
    assert_equal(root_group_action(C2, lt, [1, 0]), 1)

def test_action_depends_on_residues_only():
    A2 = build_root_system('A2')
    for d, delta, shift in [(3, (1, 2), (1, -1)), (5, (4, 0), (-2, 3))]:
        lt = local_type(A2, d, delta)
        moved = local_type(A2, d, [x + d * v for x, v in zip(delta, shift)])
        for i in range(A2.n_roots):
            assert_equal(root_group_action(A2, lt, i), root_group_action(A2, moved, i))

def check_round_trip(rs, d, delta):
    lt = local_type(rs, d, delta)
    w = weight_of_local_rep(rs, d, delta)
    assert in_alcove(rs, w).status != OUTSIDE

    minimal = local_rep_of_weight(rs, lt.theta)
    assert_equal(d % minimal.d, 0)
    assert_equal(tuple(x * (d // minimal.d) for x in minimal.delta), tuple(delta))
    assert_equal(weight_of_local_rep(rs, minimal.d, minimal.delta), w)
    # the least order is an invariant of the affine Weyl orbit
    standard = local_rep_of_weight(rs, w)
    assert_equal(standard.d, minimal.d)

    zeros = frozenset(i for i in range(rs.n_roots)
                      if root_group_action(rs, standard, i) == 0)
    assert_equal(zeros, centralizer_roots(rs, w))
    if is_subgroup_of_GA(rs, w):
        assert_equal(zeros, levi_roots(rs, w))
    lt_zeros = frozenset(i for i in range(rs.n_roots)
                         if root_group_action(rs, lt, i) == 0)
    assert_equal(lt_zeros, centralizer_roots(rs, lt.theta))

def test_round_trip():
    for name in ['A1', 'A2']:
        rs = build_root_system(name)
        for d in range(1, 13):
            for delta in product(range(d), repeat=rs.rank):
                check_round_trip(rs, d, delta)
