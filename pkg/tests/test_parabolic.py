import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from flagqh.errors import ConfigurationError, UsageError
from flagqh.parabolic import make_setup, preset
from flagqh.reference import TABLE3, TABLE4
from flagqh.weyl import from_word, random_element


def pairings(setup, lam):
    """Pairings of ``lam`` with every positive root of the Levi."""
    rs = setup.rs
    return [rs.pairing(beta, lam) for beta in rs.positive_roots_in(setup.dp)]


def in_qp(setup, diff):
    return all(diff[i] == 0 for i in setup.outside)


SMALL = [("B", 3, [1, 2]), ("C", 3, [1, 2]), ("D", 4, [1, 2, 3]), ("A", 3, [1, 2]), ("F", 4, [1, 2])]


@pytest.mark.parametrize("kind,rank,dp", SMALL)
def test_lift_characterisation_and_uniqueness(kind, rank, dp):
    s = make_setup(kind, rank, dp)
    for lam in itertools.product(range(-2, 3), repeat=rank):
        lam_b, _ = s.pw_lift(lam)
        assert set(pairings(s, lam_b)) <= {0, -1}
        assert in_qp(s, [a - b for a, b in zip(lam_b, lam)])
    # brute force: the lift is the only coroot in lam + Q_P^vee with pairings in {0,-1}
    lam = tuple(1 if i in s.outside else 0 for i in range(rank))
    lam_b, _ = s.pw_lift(lam)
    hits = []
    for coeffs in itertools.product(range(-6, 7), repeat=len(dp)):
        cand = list(lam)
        for i, c in zip(s.dp, coeffs):
            cand[i] += c
        if set(pairings(s, tuple(cand))) <= {0, -1}:
            hits.append(tuple(cand))
    assert hits == [lam_b]


@pytest.mark.parametrize("case,r", sorted(TABLE4))
def test_lift_element_lengths(case, r):
    s = preset(case, r)
    for row in s.lifting_table():
        lam_b, u = s.lift_element(row.rep)
        assert u == row.u
        assert s.is_virtual_null(lam_b) or set(pairings(s, lam_b)) == {0, -1}


def test_psi_and_preimage_round_trip():
    s = preset("C1B", 2)
    rng = random.Random(1)
    for _ in range(30):
        w = s.coset_rep(random_element(s.rs, rng))
        lam = tuple(rng.randint(0, 2) if i in s.outside else 0 for i in range(s.n))
        x, lam_b = s.psi(lam, w)
        assert s.psi_preimage(x, lam_b) == (w, lam)
    with pytest.raises(UsageError):
        s.psi((0, 0, 1), from_word(s.rs, [0]))


@pytest.mark.parametrize("case,r", [("C1B", 2), ("C1C", 2), ("C2", 3), ("C9", 2), ("C9", 3), ("C10", 3)])
def test_null_lattice(case, r):
    s = preset(case, r)
    lat = s.null_lattice
    for v in lat.lb_basis:
        assert s.is_virtual_null(v)
    assert lat.invariants == TABLE3[(case, r)][1]
    assert len(s.nontrivial_classes()) == lat.order - 1
    assert s.quotient_via_coweights() == lat.invariants


@pytest.mark.parametrize("case,r,ambient", [
    ("C1B", 2, "B3"), ("C1C", 3, "C4"), ("C2", 4, "D5"), ("C9", 2, "F4"), ("C10", 3, "F4"), ("C5", 5, "E6"),
    ("C7", 4, "E6"), ("C4", 6, "E7"), ("C7", 7, "E8"),
])
def test_presets_detect_their_case(case, r, ambient):
    s = preset(case, r)
    assert s.rs.name.startswith(ambient) and s.case == case
    assert s.dp == tuple(range(r))


def test_detect_case_generic():
    assert make_setup("A", 3, [1, 2]).case == "A-type"
    assert make_setup("A", 3, []).case == "empty"
    assert make_setup("A", 4, [1, 4]).case == "disconnected-composite"
    with pytest.raises(ConfigurationError):
        make_setup("A", 3, [1, 1])
    with pytest.raises(ConfigurationError):
        make_setup("A", 3, [6])


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([("B", 3, (1, 2)), ("C", 4, (1, 2, 3)), ("F", 4, (1, 2, 3)), ("D", 5, (1, 2, 3))]),
       st.lists(st.integers(-3, 3), min_size=5, max_size=5))
def test_lift_depends_only_on_class(spec, raw):
    kind, rank, dp = spec
    s = make_setup(kind, rank, dp)
    lam = tuple(raw[:rank])
    moved = list(lam)
    for k, i in enumerate(s.dp):
        moved[i] += raw[(k + 1) % len(raw)]
    assert s.pw_lift(lam) == s.pw_lift(tuple(moved))
    assert s.class_key(lam) == s.class_key(tuple(moved))
