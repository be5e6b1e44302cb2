from fractions import Fraction
from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from ghostct.exactlin import (
    Matrix,
    Subspace,
    commutant,
    format_scalar,
    kernel_basis,
    parse_scalar,
    rank,
    rref,
    solve,
    trace_form_radical,
)

small = st.integers(min_value=-3, max_value=3).map(Fraction)


@st.composite
def matrices(draw, max_rows=4, max_cols=4):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r))
    return Matrix.from_rows(rows, c)


@st.composite
def subspace_pairs(draw, n=4):
    def one():
        k = draw(st.integers(0, 4))
        return Subspace.span(draw(st.lists(st.lists(small, min_size=n, max_size=n), min_size=k, max_size=k)), n)

    return one(), one()


def brute_rank(m: Matrix) -> int:
    """Largest nonsingular square minor, by cofactor determinants."""

    def det(rows):
        if len(rows) == 1:
            return rows[0][0]
        return sum((-1) ** j * rows[0][j] * det([r[:j] + r[j + 1 :] for r in rows[1:]]) for j in range(len(rows)))

    for k in range(min(m.rows, m.cols), 0, -1):
        for rs in combinations(range(m.rows), k):
            for cs in combinations(range(m.cols), k):
                if det([[m.data[r][c] for c in cs] for r in rs]):
                    return k
    return 0


def test_rref_small_example():
    m = Matrix.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    r, k, piv = rref(m)
    assert k == 2
    assert piv == [0, 1]
    assert r.data[0] == (1, 0, 1) and r.data[1] == (0, 1, 1)


def test_solve_inconsistent_and_mismatch():
    m = Matrix.from_rows([[1, 1], [1, 1]])
    assert solve(m, [1, 2]) is None
    assert solve(m, [2, 2]) == (2, 0)
    with pytest.raises(ValueError):
        solve(m, [1])


def test_scalar_parsing():
    assert parse_scalar("-3/6") == Fraction(-1, 2)
    assert format_scalar(Fraction(4, 2)) == "2"
    for bad in ["1.5", "", "1/", "a", "1e3"]:
        with pytest.raises(ValueError):
            parse_scalar(bad)


def test_ambient_mismatch_raises():
    with pytest.raises(ValueError):
        Subspace.full(2) + Subspace.full(3)


def test_commutant_of_nilpotent_jordan_block():
    # matrices commuting with a single 3x3 Jordan block are polynomials in it
    j = Matrix.from_rows([[0, 0, 0], [1, 0, 0], [0, 1, 0]])
    assert commutant([(j, j)], 3, 3).dim == 3


def test_trace_radical_of_dual_numbers():
    # k[e]/(e^2): basis 1, e
    mult = [[(1, 0), (0, 1)], [(0, 1), (0, 0)]]
    rad = trace_form_radical(mult, 2)
    assert rad.basis == ((0, 1),)


@given(matrices())
def test_rank_matches_minors(m):
    assert rank(m) == brute_rank(m) == rank(m.T)


@given(matrices())
def test_rref_idempotent(m):
    r, k, _ = rref(m)
    assert rref(r)[0] == r and rref(r)[1] == k


@given(matrices())
def test_rank_nullity(m):
    ker = kernel_basis(m)
    assert ker.dim + rank(m) == m.cols
    for v in ker.basis:
        assert not any(m.apply(v))


@given(matrices(), st.data())
def test_solve_finds_solutions(m, data):
    x = data.draw(st.lists(small, min_size=m.cols, max_size=m.cols))
    b = m.apply(x)
    y = solve(m, b)
    assert y is not None and m.apply(y) == b


@given(subspace_pairs())
def test_grassmann_identity(pair):
    u, w = pair
    assert (u + w).dim + (u & w).dim == u.dim + w.dim
    assert (u & w) <= u and (u & w) <= w and u <= u + w


@given(subspace_pairs())
def test_quotient_coordinates(pair):
    u, _ = pair
    rest = u.complement_positions()
    assert len(rest) == u.ambient_dim - u.dim
    for v in u.basis:
        assert not any(u.quotient_coordinates(v))
        assert u.coordinates(v) == tuple(v[p] for p in u.pivots)


@given(st.fractions(max_denominator=50))
def test_scalar_round_trip(q):
    assert parse_scalar(format_scalar(q)) == q


@settings(max_examples=30)
@given(st.integers(1, 3), st.data())
def test_commutant_brute_force(n, data):
    a = Matrix.from_rows(data.draw(st.lists(st.lists(st.integers(0, 1).map(Fraction), min_size=n, max_size=n), min_size=n, max_size=n)))
    b = Matrix.from_rows(data.draw(st.lists(st.lists(st.integers(0, 1).map(Fraction), min_size=n, max_size=n), min_size=n, max_size=n)))
    space = commutant([(a, b)], n, n)
    for v in space.basis:
        x = Matrix.from_flat(v, n, n)
        assert x @ a == b @ x
    # every 0/1 solution lies in the computed space
    for bits in product([0, 1], repeat=n * n):
        x = Matrix.from_flat([Fraction(t) for t in bits], n, n)
        if x @ a == b @ x:
            assert x.flat() in space
