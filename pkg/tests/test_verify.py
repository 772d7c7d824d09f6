import json

import pytest

from flagqh import reference, verify
from flagqh.errors import UsageError
from flagqh.parabolic import make_setup, preset
from flagqh.weyl import identity


def test_example_passes_and_is_stable():
    a, b = verify.check_example12(), verify.check_example12()
    assert a.passed
    assert json.dumps(a.to_json(), sort_keys=True) == json.dumps(b.to_json(), sort_keys=True)
    assert "wall_time" not in a.to_json() and "wall_time" in a.to_json(timing=True)


def test_small_checks_pass():
    a3 = make_setup("A", 3, [1, 2])
    b3 = preset("C1B", 2)
    for report in (
        verify.check_filtration(a3),
        verify.check_grading_coincidence(b3),
        verify.check_simple_grades(b3),
        verify.check_psi_welldefined(b3, min_classes=10),
        verify.check_null_additivity(b3, min_classes=10),
        verify.check_psi_morphism(b3, max_degree=6),
        verify.check_theorem_general(a3, degree_cap=6),
        verify.check_cup_vanishing(a3),
        verify.check_cup_square(b3),
        verify.check_virtual_null_product(b3, max_degree=6),
    ):
        assert report.passed, report.to_text()
        assert report.instances > 0


def test_grade_semigroup_disconnected():
    for s in (make_setup("A", 4, [1, 3]), make_setup("D", 4, [1, 3, 4])):
        rep = verify.check_grade_semigroup(s, max_degree=6)
        assert rep.passed and rep.instances > 100
        assert rep.details["components"] >= 2


def test_negative_control_grading_is_caught():
    report = verify.check_filtration_negative_control(make_setup("A", 2, [1]))
    # the control passes when the corrupted grading is rejected
    assert report.passed
    bad = verify.check_filtration(make_setup("A", 2, [1]), grade=verify.corrupted_grade(verify._Ctx(make_setup("A", 2, [1]))))
    assert not bad.passed and bad.counterexample


def test_perturbed_reference_table_fails(monkeypatch):
    good = dict(reference.TABLE3)
    assert verify.reproduce_tables(3).passed
    gens, inv = good[("C9", 3)]
    monkeypatch.setitem(reference.TABLE3, ("C9", 3), (gens, (3,)))
    assert not verify.reproduce_tables(3).passed


def test_perturbed_grade_table_fails(monkeypatch):
    original = reference.table2_expected

    def shifted(case, r):
        a, b = original(case, r)
        return a, tuple(x + (i == 0) for i, x in enumerate(b)) if case == "C9" else b
    monkeypatch.setattr(reference, "table2_expected", shifted)
    assert not verify.reproduce_tables(2).passed


def test_inverted_surjectivity_expectation_fails():
    s = preset("C1B", 2)
    assert verify.check_psi_injective_surjective(s, expect_surjective=True).passed
    assert not verify.check_psi_injective_surjective(s, expect_surjective=False).passed


def test_wrong_longest_element_breaks_cup_vanishing():
    s = make_setup("A", 3, [1, 2])
    s.__dict__["w_p"] = identity(s.rs)
    assert not verify.check_cup_vanishing(s).passed


def test_cup_square_scope():
    a3 = verify.check_cup_square(make_setup("A", 3, [1, 2]))
    assert a3.passed and a3.instances == 0 and a3.skipped
    assert verify.check_cup_square(preset("C10", 3)).instances == 1
    # a simple reflection does not square to zero in the Levi flag variety
    assert not verify.check_cup_square(preset("C1B", 2), words=[(1,)]).passed


def test_surjectivity_prediction():
    assert verify.surjectivity_expected(preset("C1B", 2)) is True
    assert verify.surjectivity_expected(preset("C1C", 2)) is False
    assert verify.surjectivity_expected(preset("C2", 3)) is None
    assert verify.levi_is_type_a(preset("C2", 3))


def test_usage_errors():
    with pytest.raises(UsageError):
        verify.reproduce_tables(9)
    with pytest.raises(UsageError):
        verify.run_suite("nope")
