"""Every documented invariant, via the shared verify suites."""

import pytest

import qhog.homogenizer
from qhog import verify
from qhog.homogenizer import AffineSuperOp


@pytest.mark.parametrize("name", sorted(verify.ALL_CHECKS))
def test_invariant_suite(name):
    result = verify.run_check(name, seed=0)
    assert result.ok, f"{name}: {result.detail}"


def test_suites_catch_sign_mutation(monkeypatch):
    """Flipping the commutator sign in the step matrix must trip the oracle suite."""
    real = qhog.homogenizer.superoperator

    def flipped(xi, angle):
        m = real(xi, angle).matrix.copy()
        m[1:, 1:] = m[1:, 1:].T  # transposing the block flips the cross-product part
        return AffineSuperOp(m)

    monkeypatch.setattr(qhog.homogenizer, "superoperator", flipped)
    result = verify.run_check("homogenizer.three_way_agreement", seed=0)
    assert not result.ok


def test_checks_are_deterministic():
    a = verify.run_check("homogenizer.fixed_point", seed=1)
    b = verify.run_check("homogenizer.fixed_point", seed=1)
    assert a.detail == b.detail


def test_quick_mode_runs_everything():
    results = verify.run_checks(seed=2, quick=True)
    assert len(results) == len(verify.ALL_CHECKS)
    assert all(r.ok for r in results), [r.name for r in results if not r.ok]
