import pytest
from hypothesis import given, strategies as st

from cycshuffle.errors import DomainError
from cycshuffle.permcore import (
    CyclicPerm,
    LinearPerm,
    canonicalize,
    cyclic_descent_bottoms,
    cyclic_descent_number,
    cyclic_descent_set,
    cyclic_major_index,
    descent_number,
    descent_set,
    major_index,
    parse_cyclic,
    parse_perm,
    split,
    stat_summary,
)

import oracles

words = st.lists(st.integers(1, 60), unique=True, min_size=1, max_size=9)


def cyc(*letters):
    return canonicalize(letters)


@pytest.mark.parametrize("word, expected", [
    ((1, 3, 4, 5), set()),
    ((4, 1, 3, 2), {1, 3}),
    ((6, 3, 1, 4), {1, 2}),
    ((), set()),
])
def test_descent_set(word, expected):
    assert descent_set(word) == expected
    assert descent_set(word) == oracles.des_set(word)


@pytest.mark.parametrize("word, expected", [((4, 1, 3, 2), 4), ((1, 3, 4, 5), 0), ((6, 1, 4, 3), 4)])
def test_major_index(word, expected):
    assert major_index(word) == expected
    assert major_index(LinearPerm(word)) == expected


@pytest.mark.parametrize("word, expected", [((5,), set()), ((4, 2, 3, 1), {1, 3}), ((1, 4), {2})])
def test_cyclic_descent_set(word, expected):
    assert cyclic_descent_set(word) == expected


def test_cyclic_descent_set_rejects_empty():
    with pytest.raises(DomainError):
        cyclic_descent_set(())


@pytest.mark.parametrize("cp, expected", [(cyc(5), 0), (cyc(6, 3), 1), (cyc(6, 4, 3, 1), 3)])
def test_cyclic_descent_number(cp, expected):
    assert cyclic_descent_number(cp) == expected


@pytest.mark.parametrize("word, rep", [
    ((2, 3, 1, 4), (4, 2, 3, 1)),
    ((4, 2, 3, 1), (4, 2, 3, 1)),
    ((3, 4, 5, 1), (5, 1, 3, 4)),
])
def test_canonicalize(word, rep):
    assert canonicalize(word).rep.letters == rep


def test_class_of_4231_lists_four_rotations():
    cls = {canonicalize(w) for w in [(4, 2, 3, 1), (2, 3, 1, 4), (3, 1, 4, 2), (1, 4, 2, 3)]}
    assert cls == {cyc(4, 2, 3, 1)}


def test_canonicalize_rejects_duplicates_and_empty():
    with pytest.raises(DomainError):
        canonicalize((3, 1, 3))
    with pytest.raises(DomainError):
        canonicalize(())


def test_cyclic_perm_constructor_requires_representative():
    with pytest.raises(DomainError):
        CyclicPerm(LinearPerm((1, 4)))
    assert CyclicPerm(LinearPerm((4, 1))) == cyc(1, 4)


def test_linear_perm_validation():
    assert len(LinearPerm(())) == 0
    for bad in [(1, 1), (0, 2), (-3,)]:
        with pytest.raises(DomainError):
            LinearPerm(bad)


@pytest.mark.parametrize("i, expected", [
    (5, (5, 1, 3, 4)),
    (1, (1, 3, 4, 5)),
    (3, (3, 4, 5, 1)),
    (4, (4, 5, 1, 3)),
])
def test_split(i, expected):
    assert split(cyc(5, 1, 3, 4), i).letters == expected


def test_split_rejects_foreign_letter():
    with pytest.raises(DomainError):
        split(cyc(5, 1, 3, 4), 2)


@pytest.mark.parametrize("cp, expected", [(cyc(6, 4, 1, 3), {1, 4}), (cyc(4, 1, 2, 3), {1}), (cyc(5), set())])
def test_cyclic_descent_bottoms(cp, expected):
    assert cyclic_descent_bottoms(cp) == expected


@pytest.mark.parametrize("cp, expected", [(cyc(4, 1, 3, 2), 4), (cyc(4, 1, 2, 3), 1), (cyc(5), 0)])
def test_cyclic_major_index(cp, expected):
    assert cyclic_major_index(cp) == expected


def test_stat_summary_bundle():
    st_ = stat_summary(cyc(4, 1, 3, 2))
    assert (st_.des, st_.maj, st_.cdes) == (2, 4, 2)
    assert st_.des_set == {1, 3} and st_.cbd == {1, 2}
    assert stat_summary(LinearPerm(())).des == 0


def test_parse_literals():
    assert parse_perm("6,3,1,4").letters == (6, 3, 1, 4)
    assert parse_perm("[6, 3]").letters == (6, 3)
    assert parse_perm("").letters == ()
    assert parse_cyclic("[1,4,6,3]") == cyc(6, 3, 1, 4)
    assert str(cyc(1, 4, 6, 3)) == "[6,3,1,4]"
    for bad in ["6,,3", "a,b", "1,1", "0,2", "3,-1", "1.5"]:
        with pytest.raises(DomainError):
            parse_perm(bad)


@given(words)
def test_cdes_is_rotation_invariant(w):
    cp = canonicalize(w)
    for rot in oracles.rotations(w):
        assert len(cyclic_descent_set(rot)) == cyclic_descent_number(cp)


@given(words)
def test_bottom_count_equals_cdes(w):
    cp = canonicalize(w)
    assert len(cyclic_descent_bottoms(cp)) == cyclic_descent_number(cp)
    assert cyclic_descent_bottoms(cp) == cyclic_descent_bottoms(w)


@given(st.lists(st.integers(1, 60), unique=True, min_size=2, max_size=9))
def test_cdes_bounds(w):
    assert 1 <= cyclic_descent_number(canonicalize(w)) <= len(w) - 1


@given(words)
def test_representative_bridge(w):
    cp = canonicalize(w)
    assert descent_number(cp.rep) == cyclic_descent_number(cp)


@given(words)
def test_tail_major_index(w):
    cp = canonicalize(w)
    r = cyclic_descent_number(cp)
    assert major_index(cp.tail) == cyclic_major_index(cp) - r


@given(words, st.data())
def test_split_descent_case_analysis(w, data):
    cp = canonicalize(w)
    i = data.draw(st.sampled_from(w))
    d = descent_number(split(cp, i))
    if i in cyclic_descent_bottoms(cp):
        assert d == cyclic_descent_number(cp) - 1
    else:
        assert d == cyclic_descent_number(cp)


@given(words)
def test_canonicalize_idempotent_and_class_constant(w):
    cp = canonicalize(w)
    assert canonicalize(cp.rep) == cp
    assert {canonicalize(r) for r in oracles.rotations(w)} == {cp}
    assert cp.rep.letters == oracles.rep(w)


@given(words)
def test_statistics_match_definitions(w):
    assert descent_set(w) == oracles.des_set(w)
    assert cyclic_descent_set(w) == oracles.cdes_set(w)
