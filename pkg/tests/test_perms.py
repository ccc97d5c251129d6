from itertools import permutations

import pytest

from ybe.perms import (
    compose,
    cycle_string,
    cycles,
    from_cycles,
    identity,
    inverse,
    is_permutation,
    orbit,
    perm_order,
)


def test_identity_and_validity():
    assert identity(4) == (0, 1, 2, 3)
    assert is_permutation((2, 0, 1))
    assert not is_permutation((0, 0, 1))
    assert not is_permutation((0, 3))


def test_compose_is_p_after_q():
    p = (1, 2, 0)
    q = (0, 2, 1)
    # compose(p, q)[i] = p[q[i]]
    assert compose(p, q) == (1, 0, 2)
    assert compose(p, identity(3)) == p
    assert compose(identity(3), p) == p


def test_inverse_exhaustive_s4():
    for p in permutations(range(4)):
        assert compose(p, inverse(p)) == identity(4)
        assert compose(inverse(p), p) == identity(4)


def test_orbit_and_cycles():
    p = from_cycles(5, [(0, 1, 2), (3, 4)])
    assert orbit(p, 0) == (0, 1, 2)
    assert orbit(p, 1) == (1, 2, 0)
    assert orbit(p, 3) == (3, 4)
    assert cycles(p) == [(0, 1, 2), (3, 4)]
    assert cycles(identity(3), include_fixed=True) == [(0,), (1,), (2,)]


def test_from_cycles_rejects_overlap():
    with pytest.raises(ValueError):
        from_cycles(4, [(0, 1), (1, 2)])


@pytest.mark.parametrize("p, order", [
    (identity(3), 1),
    ((1, 0, 2), 2),
    ((1, 2, 0), 3),
    (from_cycles(5, [(0, 1), (2, 3, 4)]), 6),
])
def test_perm_order(p, order):
    assert perm_order(p) == order


def test_cycle_string():
    names = ("x1", "x2", "x3", "x4")
    assert cycle_string(identity(4), names) == "id"
    assert cycle_string((1, 0, 3, 2), names) == "(x1 x2)(x3 x4)"
