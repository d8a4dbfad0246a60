import itertools
from fractions import Fraction

import pytest

from colorgder import AbelianGroup, Bicharacter, GradingError, colorized_sign, super_sign


def test_group_reduction_and_arithmetic():
    G = AbelianGroup((2, 0, 3))
    assert G.element((3, -5, 7)) == (1, -5, 1)
    assert G.add((1, 2, 2), (1, 3, 2)) == (0, 5, 1)
    assert G.neg((1, 2, 1)) == (1, -2, 2)
    with pytest.raises(GradingError):
        G.element((1, 2))
    with pytest.raises(GradingError):
        AbelianGroup((1,))


def test_bicharacter_axioms_checked():
    assert not super_sign().violations()
    bad = Bicharacter(AbelianGroup((2,)), [[2]])
    assert bad.violations()
    with pytest.raises(GradingError):
        Bicharacter(AbelianGroup((2,)), [[0]])


def test_bicharacter_is_biadditive():
    G = AbelianGroup((0, 0))
    eps = Bicharacter(G, [[1, 2], [Fraction(1, 2), -1]])
    assert not eps.violations()
    elems = [G.element(g) for g in itertools.product(range(-2, 3), repeat=2)]
    for f, g, h in itertools.product(elems[::3], repeat=3):
        assert eps(f, G.add(g, h)) == eps(f, g) * eps(f, h)
        assert eps(G.add(g, h), f) == eps(g, f) * eps(h, f)
        assert eps(g, h) * eps(h, g) == 1


def test_colorized_sign_examples():
    eps = super_sign()
    assert colorized_sign((1, 2), [(1,), (1,)], eps) == 1
    assert colorized_sign((1, 2), [(1,), (0,)], eps) == 1
    assert colorized_sign((2, 1), [(1,), (1,)], eps) == -1
    assert colorized_sign((3, 1, 2), [(1,)] * 3, eps) == 1


def _inversions_among_odd(order, parity):
    return sum(1 for a in range(len(order)) for b in range(a + 1, len(order))
               if order[a] > order[b] and parity[order[a] - 1] and parity[order[b] - 1])


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_super_sign_matches_inversion_count(m):
    eps = super_sign()
    for parity in itertools.product((0, 1), repeat=m):
        degs = [(p,) for p in parity]
        for order in itertools.permutations(range(1, m + 1)):
            want = (-1) ** _inversions_among_odd(order, parity)
            assert colorized_sign(order, degs, eps) == want


def test_colorized_sign_trivial_bicharacter_is_one():
    eps = Bicharacter(AbelianGroup(()), None)
    for order in itertools.permutations(range(1, 5)):
        assert colorized_sign(order, [()] * 4, eps) == 1


def test_colorized_sign_independent_of_swap_sequence():
    # product over all inverted pairs equals the bubble-sort product
    G = AbelianGroup((0, 0))
    eps = Bicharacter(G, [[1, 3], [Fraction(1, 3), -1]])
    degs = [(1, 0), (0, 1), (1, 1), (2, -1)]
    for order in itertools.permutations(range(1, 5)):
        want = 1
        for a in range(4):
            for b in range(a + 1, 4):
                x, y = order[a], order[b]
                if x > y:
                    want *= eps(degs[y - 1], degs[x - 1])
        assert colorized_sign(order, degs, eps) == want
