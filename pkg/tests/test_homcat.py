from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ghostct.exactlin import solve_combination, unit_vector
from ghostct.gen import shipped
from ghostct.homcat import (
    CategoryError,
    Morphism,
    basis_morphism,
    compose,
    ideal_basis,
    ideal_pair,
    identity,
    is_left_approx,
    is_right_approx,
    left_approx,
    make_table,
    minimize_approx,
    quotient,
    right_approx,
    validate,
)

ONE = Fraction(1)


def linear_chain(k: int, twist=None):
    """Path category of 1 -> 2 -> ... -> k with all Homs 1-dimensional forward."""
    hom = [[int(x <= y) for y in range(k)] for x in range(k)]
    comp = {}
    for x in range(k):
        for y in range(x, k):
            for z in range(y, k):
                comp[(x, y, z)] = (((ONE,),),)
    if twist:
        comp[twist] = (((Fraction(2),),),)
    return make_table([str(i + 1) for i in range(k)], hom, comp, [(ONE,)] * k)


def test_chain_is_valid():
    assert validate(linear_chain(4)) == []


def test_associativity_fault_detected():
    c = linear_chain(4, twist=(0, 2, 3))
    problems = validate(c)
    assert any("associativity" in p for p in problems)


def test_wrong_identity_detected():
    c = linear_chain(2)
    bad = make_table(c.names, c.hom, c.comp, [(Fraction(2),), (ONE,)])
    assert any("identity of 1" in p for p in validate(bad))
    missing = make_table(c.names, c.hom, c.comp, [(Fraction(0),), (ONE,)])
    assert any("missing" in p for p in validate(missing))


def test_non_local_endomorphisms_detected():
    # End(x) = k x k with basis e, 1 - e written as idempotents u, v
    comp = {(0, 0, 0): (((ONE, 0), (0, 0)), ((0, 0), (0, ONE)))}
    c = make_table(["x"], [[2]], comp, [(ONE, ONE)])
    assert validate(c) == ["End(x) is not split local"]


def test_compose_checks_endpoints():
    c = linear_chain(3)
    f = basis_morphism(c, 0, 1, 0)
    with pytest.raises(CategoryError):
        compose(c, f, f)
    g = basis_morphism(c, 1, 2, 0)
    assert compose(c, g, f).blocks == (((ONE,),),)
    assert compose(c, identity(c, [1]), f) == f


def test_quotient_of_chain():
    c = linear_chain(3)
    q = quotient(c, [1], [0, 2])
    assert q.hom == ((1, 0), (0, 1))
    assert validate(q) == []


def test_minimize_rejects_non_approximation():
    c = linear_chain(3)
    zero = Morphism((1,), (2,), (((Fraction(0),),),))
    with pytest.raises(CategoryError):
        minimize_approx(c, [1], zero, "right")


SMALL = ["cc_a2", "stnak_2_4", "rc_a2_2"]


@st.composite
def category_and_sets(draw):
    t = shipped(draw(st.sampled_from(SMALL)))
    n = t.size
    d = draw(st.sets(st.integers(0, n - 1), max_size=n))
    extra = draw(st.sets(st.integers(0, n - 1), max_size=n))
    x = draw(st.integers(0, n - 1))
    y = draw(st.integers(0, n - 1))
    return t.base, sorted(d), sorted(d | extra), x, y


@settings(max_examples=60, deadline=None)
@given(category_and_sets())
def test_ideal_monotone(data):
    c, d, bigger, x, y = data
    assert ideal_pair(c, d, x, y) <= ideal_pair(c, bigger, x, y)
    assert ideal_pair(c, [], x, y).dim == 0
    assert ideal_pair(c, [x], x, y).dim == c.hom[x][y]


@settings(max_examples=60, deadline=None)
@given(category_and_sets(), st.integers(0, 100))
def test_ideal_closed_under_composition(data, seed):
    c, d, _, x, y = data
    z = seed % c.size
    space = ideal_pair(c, d, x, y)
    target = ideal_pair(c, d, x, z)
    for f in space.basis:
        for gi in range(c.hom[y][z]):
            assert c.product(x, y, z, unit_vector(c.hom[y][z], gi), f) in target
    assert ideal_basis(c, d, [x], [y]) == space


def _factors(c, f: Morphism, d: int) -> bool:
    """Every morphism d -> target(f) is f composed with something, via explicit composition."""
    total = sum(c.hom[d][t] for t in f.target)
    if total == 0:
        return True
    images = []
    for s, x in enumerate(f.source):
        for k in range(c.hom[d][x]):
            h = Morphism((d,), f.source, tuple((unit_vector(c.hom[d][x], k) if j == s else (0,) * c.hom[d][src],) for j, src in enumerate(f.source)))
            g = compose(c, f, h)
            images.append([q for row in g.blocks for q in row[0]])
    for i in range(total):
        if solve_combination(images, unit_vector(total, i), total) is None:
            return False
    return True


@settings(max_examples=40, deadline=None)
@given(category_and_sets())
def test_right_approximations_are_surjective(data):
    c, d, _, x, y = data
    target = [x, y]
    f = right_approx(c, d, target)
    assert is_right_approx(c, d, f)
    assert all(_factors(c, f, e) for e in d)
    m = minimize_approx(c, d, f, "right")
    assert is_right_approx(c, d, m)
    assert all(_factors(c, m, e) for e in d)
    assert len(m.source) <= len(f.source)


@settings(max_examples=40, deadline=None)
@given(category_and_sets())
def test_left_approximations(data):
    c, d, _, x, _ = data
    f = left_approx(c, d, [x])
    assert is_left_approx(c, d, f)
    m = minimize_approx(c, d, f, "left")
    assert is_left_approx(c, d, m)
    # dropping any further summand breaks the property
    for slot in range(len(m.target)):
        trial = Morphism(m.source, m.target[:slot] + m.target[slot + 1 :], m.blocks[:slot] + m.blocks[slot + 1 :])
        assert not is_left_approx(c, d, trial)
