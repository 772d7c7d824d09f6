import pytest
from hypothesis import given, settings, strategies as st

from flagqh.errors import ConfigurationError, DomainError
from flagqh.rootsys import build_root_system

from oracles import CARTAN, POSITIVE_ROOT_COUNT, positive_roots

TYPES = [("A", n) for n in range(1, 6)] + [("B", n) for n in (2, 3, 4)] + [("C", n) for n in (2, 3, 4)] + \
    [("D", 4), ("D", 5), ("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]


@pytest.mark.parametrize("kind,rank", TYPES)
def test_positive_root_count(kind, rank):
    rs = build_root_system(kind, rank)
    assert len(rs.positive_roots) == POSITIVE_ROOT_COUNT[kind](rank)


@pytest.mark.parametrize("name", sorted(CARTAN))
def test_roots_match_closure_oracle(name):
    rs = build_root_system(name[0], int(name[1:]))
    assert [list(r) for r in rs.cartan] == CARTAN[name]
    assert sorted(rs.positive_roots) == sorted(positive_roots(CARTAN[name]))


def test_b2_convention():
    rs = build_root_system("B", 2)
    assert rs.cartan[0][1] == -1 and rs.cartan[1][0] == -2
    # short root alpha_2: coroot is 2 alpha_2 in root terms, i.e. the simple coroot
    assert rs.coroot_of((0, 1)) == (0, 1)
    # alpha_1 + alpha_2 is short: its coroot is 2 a_1^vee + a_2^vee
    assert rs.coroot_of((1, 1)) == (2, 1)
    assert rs.coroot_of((1, 2)) == (1, 1)


def test_highest_root_and_coxeter_number():
    assert build_root_system("E", 8).highest_root() == (2, 3, 4, 6, 5, 4, 3, 2)
    assert build_root_system("F", 4).highest_root() == (2, 3, 4, 2)
    assert build_root_system("E", 6).coxeter_number() == 12


def test_errors():
    with pytest.raises(ConfigurationError):
        build_root_system("Q", 2)
    with pytest.raises(ConfigurationError):
        build_root_system("E", 5)
    with pytest.raises(ConfigurationError):
        build_root_system("D", 2)
    with pytest.raises(DomainError):
        build_root_system("A", 2).coroot_of((2, 0))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([("B", 3), ("C", 3), ("F", 4), ("G", 2), ("D", 4)]), st.data())
def test_reflections_permute_roots(kind_rank, data):
    rs = build_root_system(*kind_rank)
    beta = data.draw(st.sampled_from(rs.positive_roots))
    i = data.draw(st.integers(0, rs.rank - 1))
    image = rs.reflect_root(i, beta)
    assert rs.is_root(image)
    # <beta, beta^vee> = 2 and coroot reflections agree with root reflections
    cor = rs.coroot_of(beta)
    assert rs.pairing(beta, cor) == 2
    assert rs.coroot_of(image if any(x > 0 for x in image) else tuple(-x for x in image)) in (
        rs.reflect_coroot(i, cor), tuple(-x for x in rs.reflect_coroot(i, cor)))


def test_relabel_is_isomorphic():
    rs = build_root_system("F", 4)
    rl = rs.relabel((3, 2, 1, 0))
    assert len(rl.positive_roots) == 24
    assert rl.cartan[0][1] == rs.cartan[3][2]
