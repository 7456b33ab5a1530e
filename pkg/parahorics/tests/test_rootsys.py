from fractions import Fraction
from itertools import combinations
from math import factorial

import numpy as np
from numpy.testing import assert_equal, assert_raises, assert_array_equal

from parahorics.rootsys import (build_root_system, parse_type, pairing,
                                highest_root, flag_dimension, reflection_word,
                                weyl_group_order, expected_root_count,
                                hyperspecial_count, VALID_RANKS,
                                RootSystemError)

def all_simple_types(max_rank=8):
    for letter in sorted(VALID_RANKS):
        for rank in range(1, max_rank + 1):
            if VALID_RANKS[letter](rank):
                yield letter, rank

def test_small_types():
    rs = build_root_system([('A', 1)])
    assert_equal((rs.n_roots, rs.rank, rs.dim_g), (2, 1, 3))

    rs = build_root_system([('A', 2)])
    assert_equal((rs.n_roots, rs.dim_g), (6, 8))
    assert_array_equal(rs.marks, [1, 1])
    assert_array_equal(rs.roots[:3], [[1, 0], [0, 1], [1, 1]])
    assert_array_equal(rs.roots[3:], -rs.roots[:3])

    rs = build_root_system('G2')
    assert_equal(rs.n_roots, 12)
    assert_array_equal(rs.marks, [3, 2])

def test_root_counts():
    closed_form = {('E', 6): 72, ('E', 7): 126, ('E', 8): 240,
                   ('F', 4): 48, ('G', 2): 12}
    for letter, rank in all_simple_types():
        rs = build_root_system([(letter, rank)])
        if letter == 'A':
            expected = rank * (rank + 1)
        elif letter in 'BC':
            expected = 2 * rank ** 2
        elif letter == 'D':
            expected = 2 * rank * (rank - 1)
        else:
            expected = closed_form[(letter, rank)]
        assert_equal(rs.n_roots, expected)
        assert_equal(rs.n_roots, expected_root_count(letter, rank))
        assert_equal(rs.dim_g, rs.n_roots + rs.rank)

def test_negation_and_simple_roots():
    for letter, rank in all_simple_types(5):
        rs = build_root_system([(letter, rank)])
        for i in range(rs.n_roots):
            assert_array_equal(rs.roots[rs.negative(i)], -rs.roots[i])
            coords = rs.roots[i]
            assert (coords >= 0).all() or (coords <= 0).all()
        for i in range(rs.rank):
            assert_array_equal(rs.roots[rs.simple_index(i)], np.identity(rs.rank)[i])

def test_coroot_pairing():
    for letter, rank in all_simple_types():
        rs = build_root_system([(letter, rank)])
        for i in range(rs.n_roots):
            assert_equal(pairing(rs, rs.coroot(i), i), 2)
        # simple coroots pair with roots through the Cartan matrix
        for k in range(rs.rank):
            alpha_k = rs.simple_index(k)
            for i in range(rs.n_roots):
                assert_equal(pairing(rs, rs.coroot(alpha_k), i),
                             int(rs.cartan[k].dot(rs.roots[i])))

def test_reflection_closure_permutes_roots():
    for letter, rank in all_simple_types(6):
        rs = build_root_system([(letter, rank)])
        for k in range(rs.rank):
            images = set(rs.index_of(rs.reflect_root(k, i)) for i in range(rs.n_roots))
            assert_equal(images, set(range(rs.n_roots)))

def test_products():
    rs = build_root_system('A1xA1')
    assert_equal(rs.n_roots, 4)
    assert_array_equal(rs.marks, [1, 1])
    assert_equal(rs.dim_g, 6)

    rs = build_root_system('A2xG2')
    assert_equal(rs.n_roots, 6 + 12)
    assert_array_equal(rs.marks, [1, 1, 3, 2])
    assert_equal(rs.factor_of(3), 1)
    # no root mixes the factors
    assert not (rs.roots[:, :2].any(axis=1) & rs.roots[:, 2:].any(axis=1)).any()

def test_parse_type():
    assert_equal(parse_type('A1xA1'), [('A', 1), ('A', 1)])
    assert_equal(parse_type('g2'), [('G', 2)])
    for bad in ['', 'H3', 'A0', 'B1', 'C1', 'D2', 'E5', 'E9', 'F3', 'G3', 'A2y', 'A2x']:
        assert_raises(RootSystemError, parse_type, bad)
    assert_raises(RootSystemError, build_root_system, [])
    assert_raises(RootSystemError, build_root_system, [('A', 0)])

def test_pairing():
    A2 = build_root_system('A2')
    assert_equal(pairing(A2, [1, 0], [1, 1]), 1)
    assert_equal(pairing(A2, [Fraction(1, 3), Fraction(1, 3)], [1, 1]), Fraction(2, 3))
    C2 = build_root_system('C2')
    assert_equal(pairing(C2, [Fraction(1, 2), 0], [2, 1]), 1)
    # bilinear in the coweight
    theta, phi = [Fraction(1, 5), Fraction(-2, 3)], [Fraction(7, 4), 2]
    total = [a + b for a, b in zip(theta, phi)]
    for i in range(C2.n_roots):
        assert_equal(pairing(C2, total, i), pairing(C2, theta, i) + pairing(C2, phi, i))
    assert_raises(RootSystemError, pairing, A2, [1, 0, 0], 0)
    assert_raises(RootSystemError, pairing, A2, [1, 0], [2, 1])

def test_highest_root():
    top, marks = highest_root(build_root_system('A2'))
    assert_equal(top.coords, (1, 1))
    assert_array_equal(marks, [1, 1])
    top, marks = highest_root(build_root_system('C2'))
    assert_equal(top.coords, (2, 1))
    assert_array_equal(marks, [2, 1])
    top, marks = highest_root(build_root_system('A1'))
    assert_array_equal(marks, [1])

    expected = {'B3': [1, 2, 2], 'C3': [2, 2, 1], 'D4': [1, 2, 1, 1],
                'E6': [1, 2, 2, 3, 2, 1], 'E7': [2, 2, 3, 4, 3, 2, 1],
                'E8': [2, 3, 4, 6, 5, 4, 3, 2], 'F4': [2, 3, 4, 2]}
    for name, marks in expected.items():
        rs = build_root_system(name)
        assert_array_equal(highest_root(rs)[1], marks)
        assert (rs.marks >= 1).all()

    rs = build_root_system('A1xG2')
    assert_array_equal(highest_root(rs, 1)[1], [3, 2])
    assert_raises(RootSystemError, highest_root, rs, 2)

def test_flag_dimension():
    A2 = build_root_system('A2')
    assert_equal(flag_dimension(A2, []), 3)
    assert_equal(flag_dimension(A2, [0]), 2)
    assert_equal(flag_dimension(A2, [0, 1]), 0)
    assert_raises(RootSystemError, flag_dimension, A2, [2])

def test_flag_dimension_antitone():
    for name in ['B3', 'C3', 'G2', 'A1xA2']:
        rs = build_root_system(name)
        subsets = [set(c) for k in range(rs.rank + 1)
                   for c in combinations(range(rs.rank), k)]
        for I in subsets:
            for J in subsets:
                if I <= J:
                    assert flag_dimension(rs, I) >= flag_dimension(rs, J)
        assert_equal(flag_dimension(rs, range(rs.rank)), 0)
        assert_equal(flag_dimension(rs, []), rs.n_positive)

def test_reflection_word():
    for name in ['A3', 'C3', 'G2', 'F4']:
        rs = build_root_system(name)
        theta = [Fraction(k + 1, 7) for k in range(rs.rank)]
        for i in range(rs.n_roots):
            word = reflection_word(rs, i)
            image = theta
            for k in word:
                image = rs.reflect_coweight(k, image)
            p = pairing(rs, theta, i)
            expected = [t - p * int(c) for t, c in zip(theta, rs.coroot(i))]
            assert_equal(list(image), expected)

def test_coroot_coordinates():
    rs = build_root_system('C2')
    x = rs.to_coroot_coords([Fraction(1, 2), 0])
    assert_equal(list(x), [Fraction(1, 2), Fraction(1, 2)])
    assert_equal(list(rs.from_coroot_coords(x)), [Fraction(1, 2), 0])

def test_weyl_group_order():
    closed_form = {('E', 6): 51840, ('E', 7): 2903040, ('E', 8): 696729600,
                   ('F', 4): 1152, ('G', 2): 12}
    for letter, rank in all_simple_types():
        if letter == 'A':
            expected = factorial(rank + 1)
        elif letter in 'BC':
            expected = 2 ** rank * factorial(rank)
        elif letter == 'D':
            expected = 2 ** (rank - 1) * factorial(rank)
        else:
            expected = closed_form[(letter, rank)]
        assert_equal(weyl_group_order(build_root_system([(letter, rank)])), expected)
    assert_equal(weyl_group_order(build_root_system('A1xA1')), 4)
    assert_equal(weyl_group_order(build_root_system('A2xG2')), 72)

def test_hyperspecial_count():
    assert_equal(hyperspecial_count('A', 5), 6)
    assert_equal(hyperspecial_count('E', 6), 3)
    assert_equal(hyperspecial_count('E', 8), 1)
