import random
from itertools import combinations

import pytest
from hypothesis import given

from odd_diagrams.diagrams import (
    first_difference,
    is_legal,
    legal_move_toward,
    odd_diagram,
    odd_diagram_key,
    odd_length,
    render_diagrams,
    rothe_diagram,
    satisfies_legality_criterion,
)
from odd_diagrams.perms import all_perms, identity, length, parse_perm

from conftest import perm_strategy


def test_rothe_golden():
    assert rothe_diagram(parse_perm("1432")) == ((2, 2), (2, 3), (3, 2))
    assert rothe_diagram(identity(5)) == ()
    assert len(rothe_diagram(parse_perm("24513"))) == 5


def test_odd_diagram_golden():
    assert odd_diagram(parse_perm("1432")) == ((2, 3), (3, 2))
    assert odd_diagram(identity(5)) == ()
    assert odd_diagram(parse_perm("3412")) == ((1, 2), (2, 1))


def test_odd_length_golden():
    assert odd_length(identity(4)) == 0
    assert odd_length(parse_perm("1432")) == 2


def test_odd_length_equals_odd_diagram_size_sampled():
    rng = random.Random(7)
    perms8 = [tuple(rng.sample(range(1, 9), 8)) for _ in range(200)]
    for w in perms8:
        assert odd_length(w) == len(odd_diagram(w))


@given(perm_strategy(max_n=7))
def test_diagram_sizes_and_containment(w):
    rothe = rothe_diagram(w)
    odd = odd_diagram(w)
    assert set(odd) <= set(rothe)
    assert len(rothe) == length(w)
    assert len(odd) == odd_length(w)


@given(perm_strategy(max_n=7))
def test_odd_diagram_key_matches_diagram(w):
    n = len(w)
    expected = 0
    for (i, j) in odd_diagram(w):
        expected |= 1 << ((i - 1) * n + (j - 1))
    assert odd_diagram_key(w) == expected


def test_is_legal_golden():
    u = parse_perm("654172839")
    assert is_legal(u, (3, 9))
    assert is_legal(u, (3, 5))
    assert not is_legal(parse_perm("1432"), (1, 3))


def test_legality_criterion_golden():
    assert satisfies_legality_criterion(parse_perm("654172839"), (3, 9))
    assert not satisfies_legality_criterion(parse_perm("1432"), (1, 3))
    # opposite parity always fails condition (1)
    assert not satisfies_legality_criterion(parse_perm("4321"), (1, 2))


@pytest.mark.parametrize("n", range(2, 7))
def test_legality_criterion_is_sufficient(n):
    for u in all_perms(n):
        for t in combinations(range(1, n + 1), 2):
            if satisfies_legality_criterion(u, t):
                assert is_legal(u, t)


def test_first_difference_golden():
    assert first_difference(parse_perm("654172839"), parse_perm("958172634")) == 4
    assert first_difference(parse_perm("5431627"), parse_perm("7461523")) == 3
    with pytest.raises(ValueError):
        first_difference(parse_perm("123"), parse_perm("123"))


def test_legal_move_toward_golden():
    u = parse_perm("654172839")
    v = parse_perm("958172634")
    assert legal_move_toward(u, v) == parse_perm("659172834")
    assert legal_move_toward(parse_perm("5431627"), parse_perm("7461523")) == parse_perm(
        "5471623"
    )


def test_legal_move_toward_converges():
    u = parse_perm("654172839")
    v = parse_perm("958172634")
    steps = 0
    while u != v:
        nxt = legal_move_toward(u, v)
        assert first_difference(nxt, v) > first_difference(u, v) if nxt != v else True
        u = nxt
        steps += 1
        assert steps <= 9
    assert u == v


def test_legal_move_toward_rejects():
    with pytest.raises(ValueError):
        legal_move_toward(parse_perm("1432"), parse_perm("3412"))
    with pytest.raises(ValueError):
        legal_move_toward(parse_perm("213"), parse_perm("213"))


def test_render_diagrams():
    art = render_diagrams(parse_perm("1432"))
    assert art.splitlines() == [
        ". . . .",
        ". # * .",
        ". * . .",
        ". . . .",
    ]
