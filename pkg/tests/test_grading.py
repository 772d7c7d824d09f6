import random

from hypothesis import given, settings, strategies as st

from flagqh.grading import GradeVector, compare, filtration_leq, gr, gr_prime, grade_table
from flagqh.parabolic import make_setup, preset
from flagqh.reference import EXAMPLE12_GRADES, table2_expected
from flagqh.weyl import from_word, identity, random_element


def test_two_node_example_grades():
    s = make_setup("A", 2, [1])
    for word, expected in EXAMPLE12_GRADES.items():
        w = from_word(s.rs, [i - 1 for i in word])
        assert tuple(gr(s, w)) == expected
    assert tuple(gr(s, identity(s.rs), (0, 1))) == (-1, 3)


def test_simple_grades_table_rows():
    for case, r in [("C1B", 2), ("C1C", 3), ("C9", 2), ("C10", 3)]:
        s = preset(case, r)
        table = grade_table(s)
        a, b = table2_expected(case, r)
        assert tuple(table[r - 1]) == a and tuple(table[r]) == b
        for i in range(s.n):
            assert table[i].total == 2


def test_grade_vector_order():
    a, b = GradeVector((1, -5, 0)), GradeVector((1, -4, -9))
    assert a < b and compare(a, b) == "<" and compare(b, b) == "="
    assert (a + b) - b == a and -a == GradeVector((-1, 5, 0)) and 2 * a == a + a
    assert GradeVector.basis(3, 2, 4) == (0, 4, 0)
    assert a.truncate(2, 3) == (0, -5, 0)


SETUPS = [make_setup("B", 3, [1, 2]), make_setup("C", 4, [1, 2, 3]), preset("C9", 2), make_setup("A", 4, [1, 3])]


@settings(max_examples=80, deadline=None)
@given(st.integers(0, len(SETUPS) - 1), st.integers(0, 10**6),
       st.lists(st.integers(0, 3), min_size=4, max_size=4), st.lists(st.integers(0, 3), min_size=4, max_size=4))
def test_grading_properties(k, seed, lam, mu):
    s = SETUPS[k]
    n = s.n
    lam, mu = tuple(lam[:n]), tuple(mu[:n])
    w = random_element(s.rs, random.Random(seed))
    lm = tuple(a + b for a, b in zip(lam, mu))
    # additive in the coroot
    assert gr(s, w, lm) == gr(s, w, lam) + gr(s, identity(s.rs), mu)
    # total is the degree
    assert gr(s, w, lam).total == w.length() + s.rs.two_rho_pairing(lam)
    # the recursive route agrees
    assert gr_prime(s, w, lam) == gr(s, w, lam)
    # W_P has nothing in the last coordinate
    v = s.coset_rep(w).inverse() * w
    assert gr(s, v)[-1] == 0
    assert filtration_leq(s, (w, lam), gr(s, w, lam))
