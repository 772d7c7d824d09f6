from fractions import Fraction

from hypothesis import given, settings, strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from flagqh.lattice import hermite_rows, in_lattice, integer_kernel, reduce_mod, smith_invariants, solve_rational

small = st.integers(-6, 6)
matrices = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n),
                                                          min_size=m, max_size=m)))


def sympy_invariants(rows):
    snf = smith_normal_form(Matrix(rows), domain=ZZ)
    return sorted(abs(int(snf[i, i])) for i in range(min(snf.shape)) if snf[i, i] != 0)


def same_lattice(a, b):
    """Equal iff each lattice has the same rank and covolume as their sum."""
    if not a or not b:
        return not hermite_rows(a) and not hermite_rows(b)
    both = list(a) + list(b)
    inv_sum = sympy_invariants(both)
    return sympy_invariants(a) == inv_sum == sympy_invariants(b) or (
        len(sympy_invariants(a)) == len(inv_sum) == len(sympy_invariants(b))
        and _prod(sympy_invariants(a)) == _prod(inv_sum) == _prod(sympy_invariants(b)))


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_smith_invariants_match_sympy(rows):
    assert smith_invariants(rows) == sympy_invariants(rows)


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_hermite_spans_same_lattice(rows):
    h = hermite_rows(rows)
    assert same_lattice(h, rows) if any(any(r) for r in rows) else h == []
    for r in rows:
        assert in_lattice(r, h)
    # canonical: permuting the generators does not change the form
    assert hermite_rows(list(reversed(rows))) == h


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_integer_kernel_is_saturated(rows):
    ker = integer_kernel(rows)
    a = Matrix(rows)
    assert len(ker) == len(a.nullspace())
    for v in ker:
        assert all(x == 0 for x in a * Matrix(v))
    if ker:
        # a saturated sublattice has all invariant factors 1
        assert set(sympy_invariants(ker)) == {1}


def test_reduce_mod_is_canonical():
    basis = hermite_rows([[2, 1], [0, 3]])
    assert reduce_mod((5, 7), basis) == reduce_mod((5 - 2, 7 - 1), basis)
    assert in_lattice((2, 4), basis)


def test_solve_rational():
    assert solve_rational([[2, 1], [1, 3]], [3, 5]) == [Fraction(4, 5), Fraction(7, 5)]
    assert solve_rational([[1, 2], [2, 4]], [1, 2]) is None
