from __future__ import annotations

import pytest

from hydrokinetic.verification import FAULTS, run_verification


def test_full_suite_passes():
    results = run_verification()
    assert len(results) >= 8
    failed = [r.line() for r in results if not r.passed]
    assert not failed, failed


def test_fault_is_named():
    results = {r.name: r for r in run_verification(n_max=2, fault="normalization")}
    assert not results["normalization"].passed
    assert "integral" in results["normalization"].detail
    # independent families are untouched by the bad constant
    assert results["clebsch-gordan"].passed and results["spinning-field"].passed


def test_unknown_fault():
    assert FAULTS == ("normalization",)
    with pytest.raises(ValueError):
        run_verification(n_max=1, fault="virial")
