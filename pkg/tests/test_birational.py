import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hodgeblow import (
    FactorizationScript,
    FactorizationStep,
    InapplicableStepError,
    PreconditionError,
    count_delta,
    curve,
    default_catalog,
    invariant_audit,
    iwasawa,
    make_model,
    point,
    projective_space,
    run_script,
    torus,
)
from hodgeblow.birational import apply_step, script_contract
from hodgeblow.diamond import disjoint_union

import corpus

CATALOG = default_catalog()


def test_up_then_down_is_identity():
    s = FactorizationScript(projective_space(3), (FactorizationStep.up(curve(2)), FactorizationStep.down(curve(2))))
    final, trace = run_script(s)
    assert len(trace) == 3
    assert final.diamond == projective_space(3).diamond
    assert final.betti == projective_space(3).betti
    assert count_delta(s) == 0


def test_two_point_blow_ups():
    s = FactorizationScript(projective_space(2), (FactorizationStep.up(point()),) * 2)
    final, _ = run_script(s)
    assert final.h(1, 1) == 3
    assert count_delta(s) == 2


def test_blow_down_flags():
    s = FactorizationScript(projective_space(3), (FactorizationStep.up(point()), FactorizationStep.down(point())))
    final, _ = run_script(s)
    assert final.flags.kaehler is None
    assert final.flags.fujiki is True and final.flags.e1_degenerate is True


def test_impossible_blow_down_names_step():
    s = FactorizationScript(
        projective_space(3),
        (FactorizationStep.up(point()), FactorizationStep.down(curve(1))),
    )
    with pytest.raises(InapplicableStepError, match=r"^step 1: .*h\^\{1,2\}") as info:
        run_script(s)
    assert info.value.index == 1


def test_codimension_one_step():
    s = FactorizationScript(projective_space(3), (FactorizationStep.up(projective_space(2)),))
    with pytest.raises(InapplicableStepError, match="step 0"):
        run_script(s)


def test_apply_step_negative_betti():
    # h survives subtraction, b_3 does not
    x = make_model("X", [[1, 0, 0, 0], [0, 2, 2, 0], [0, 2, 2, 0], [0, 0, 0, 1]], betti=[1, 0, 2, 0, 2, 0, 1])
    with pytest.raises(InapplicableStepError, match="b_3"):
        apply_step(x, FactorizationStep.down(curve(2)))


def test_count_delta_needs_connected_centers():
    s = FactorizationScript(projective_space(3), (FactorizationStep.up(disjoint_union([point(), point()])),))
    with pytest.raises(PreconditionError, match="not connected"):
        count_delta(s)


class TestAudit:
    def test_point_blow_up_audit(self):
        s = FactorizationScript(torus(3), (FactorizationStep.up(point()),))
        final, trace, delta, report, problems = script_contract(s)
        assert report.all_equal and report.complete and not problems
        assert [e.invariant for e in report.entries][:4] == ["h^{0,0}", "h^{1,0}", "h^{2,0}", "h^{3,0}"]
        assert {e.invariant: e.left for e in report.entries}["b_2 - h^{1,1}"] == 6

    def test_different_manifolds_fail(self):
        report = invariant_audit(projective_space(3), torus(3))
        assert not report.all_equal
        assert {e.invariant for e in report.failures()} >= {"h^{1,0}", "b_1", "b_2 - h^{1,1}"}

    def test_unknown_betti(self):
        a = make_model("A", [[1, 1], [1, 1]])
        report = invariant_audit(a, a)
        assert report.all_equal and not report.complete

    def test_iwasawa_b2_minus_h11(self):
        assert {e.invariant: e.left for e in invariant_audit(iwasawa(), iwasawa()).entries}["b_2 - h^{1,1}"] == 2


@settings(max_examples=60)
@given(st.integers(0, 10_000))
def test_random_scripts_preserve_invariants(seed):
    script = corpus.random_script(random.Random(seed), CATALOG)
    final, trace, delta, report, problems = script_contract(script)
    assert not problems
    assert report.complete and report.all_equal
    assert final.h(1, 1) - trace[0].h(1, 1) == delta


def test_empty_script():
    s = FactorizationScript(projective_space(3), ())
    final, trace = run_script(s)
    assert final == trace[0] and count_delta(s) == 0


def test_up_up_down():
    s = FactorizationScript(
        projective_space(3),
        (FactorizationStep.up(point()), FactorizationStep.up(point()), FactorizationStep.down(point())),
    )
    assert count_delta(s) == 1


def test_point_blow_up_audit_cp3():
    from hodgeblow import point_blow_up

    y = point_blow_up(projective_space(3))
    report = invariant_audit(projective_space(3), y)
    assert report.all_equal and report.complete
    assert y.h(1, 1) != projective_space(3).h(1, 1)


def test_audit_dimension_mismatch():
    from hodgeblow.errors import DimensionMismatchError

    with pytest.raises(DimensionMismatchError):
        invariant_audit(projective_space(3), torus(2))
