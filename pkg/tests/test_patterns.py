from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from smoothcells.patterns import (
    NotInW0C,
    bar,
    contains_signed_pattern,
    contains_typeA_pattern,
    fl,
    parse_bar,
    restricted_forbidden_list,
    smooth_restricted,
)
from smoothcells.rootsys import build
from smoothcells.weyl import from_one_line, from_word, longest_element, multiply

signed_seqs = st.lists(st.integers(1, 30), min_size=1, max_size=7, unique=True).flatmap(
    lambda mags: st.lists(st.booleans(), min_size=len(mags), max_size=len(mags)).map(
        lambda signs: tuple(-m if s else m for m, s in zip(mags, signs))
    )
)


def test_fl_examples():
    assert fl((-5, 4, -6, 2)) == (-3, 2, -4, 1)
    assert fl((7,)) == (1,)
    assert fl((-6, 3, -7, 1)) == (-3, 2, -4, 1)


def test_fl_errors():
    with pytest.raises(ValueError):
        fl((2, -2))
    with pytest.raises(ValueError):
        fl((0, 1))


@given(signed_seqs)
def test_fl_properties(x):
    y = fl(x)
    assert fl(y) == y
    assert sorted(abs(v) for v in y) == list(range(1, len(x) + 1))
    for i in range(len(x)):
        assert (y[i] < 0) == (x[i] < 0)
        for j in range(len(x)):
            assert (abs(y[i]) < abs(y[j])) == (abs(x[i]) < abs(x[j]))
    assert contains_signed_pattern(x, y) == tuple(range(len(x)))


def test_signed_containment_examples():
    pos = contains_signed_pattern((2, 1, -3, -4), (1, -2, -3))
    assert pos == (0, 2, 3)  # first witness: (2, -3, -4); (1, -3, -4) also works
    assert fl([(2, 1, -3, -4)[k] for k in (1, 2, 3)]) == (1, -2, -3)
    assert contains_signed_pattern((-2, -3, 1), (1, -2)) is None
    assert contains_signed_pattern((1, 2, 3), (2, 1)) is None
    assert contains_signed_pattern((1,), (1, 2)) is None


def test_typeA_containment():
    assert contains_typeA_pattern((3, 4, 1, 2), "3412") == (0, 1, 2, 3)
    assert contains_typeA_pattern((4, 2, 3, 1), "4231") == (0, 1, 2, 3)
    assert contains_typeA_pattern((4, 2, 1, 3), "3412") is None
    assert contains_typeA_pattern((4, 2, 1, 3), "4231") is None
    with pytest.raises(ValueError):
        contains_typeA_pattern((1, 2), "1234")


def _inverse_perm(p):
    inv = [0] * len(p)
    for k, v in enumerate(p, start=1):
        inv[v - 1] = k
    return tuple(inv)


def test_typeA_against_generic_matcher_and_inverses():
    # 3412 and 4231 are involutions, so containment is inverse-invariant
    for p in permutations(range(1, 6)):
        for pat in ("3412", "4231"):
            generic = contains_signed_pattern(p, tuple(int(c) for c in pat)) is not None
            assert (contains_typeA_pattern(p, pat) is not None) == generic
            assert (contains_typeA_pattern(_inverse_perm(p), pat) is not None) == generic


def test_bar_notation():
    assert parse_bar("-3-412") == (-3, -4, 1, 2)
    assert parse_bar("-2-1") == (-2, -1)
    assert bar((-2, 1), overbar=False) == "-21"
    assert bar((-2, 1)) == "2̄1"


def test_restricted_list_sizes_and_members():
    assert len(restricted_forbidden_list("B")) == 11
    assert len(restricted_forbidden_list("C")) == 11
    assert len(restricted_forbidden_list("D", 4)) == 11
    assert len(restricted_forbidden_list("D", 5, verbatim=True)) == 10
    assert len(restricted_forbidden_list("D", 5)) == 11
    assert (-2, -1) in restricted_forbidden_list("B")
    assert (1, -2) in restricted_forbidden_list("C")
    assert (3, -4, 1, -2) in restricted_forbidden_list("D", 6)
    assert (-2, -3, 1, -4) in restricted_forbidden_list("D", 5)
    for fam, n in (("B", 3), ("C", 3), ("D", 4), ("D", 5)):
        for p in restricted_forbidden_list(fam, n):
            assert fl(p) == p
    with pytest.raises(ValueError):
        restricted_forbidden_list("D")
    with pytest.raises(ValueError):
        restricted_forbidden_list("A")


def test_smooth_restricted_examples():
    b3 = build("B3")
    w0 = longest_element(b3)
    w = multiply(w0, from_word(b3, (3, 2, 1)))
    assert smooth_restricted(w).smooth

    c3 = build("C3")
    w = multiply(longest_element(c3), from_word(c3, (3, 2, 3)))
    v = smooth_restricted(w)
    assert not v.smooth and v.witness[0] == (1, -2)

    d4 = build("D4")
    v = smooth_restricted(multiply(longest_element(d4), from_word(d4, (2,))))
    assert not v.smooth


def test_odd_d_recovered_pattern():
    d5 = build("D5")
    w = from_one_line(d5, (-2, -3, -4, 1, -5))
    assert not smooth_restricted(w).smooth
    assert smooth_restricted(w, verbatim=True).smooth


def test_restricted_precondition():
    b3 = build("B3")
    with pytest.raises(NotInW0C):
        smooth_restricted(from_word(b3, (1,)))
    with pytest.raises(ValueError):
        smooth_restricted(longest_element(build("A3")))
