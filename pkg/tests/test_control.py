"""Series-control plumbing."""

import pytest

from oscint import SeriesControl, control_from_env
from oscint.control import ENV_REL_TOL


def test_defaults():
    ctl = SeriesControl()
    assert ctl.rel_tol == 1e-12
    assert ctl.max_terms == 500


def test_validation():
    with pytest.raises(ValueError):
        SeriesControl(rel_tol=0.0)
    with pytest.raises(ValueError):
        SeriesControl(rel_tol=-1e-9)
    with pytest.raises(ValueError):
        SeriesControl(max_terms=0)


def test_env_override(monkeypatch):
    monkeypatch.delenv(ENV_REL_TOL, raising=False)
    assert control_from_env().rel_tol == 1e-12
    monkeypatch.setenv(ENV_REL_TOL, "1e-9")
    assert control_from_env().rel_tol == 1e-9
    # explicit argument wins over the environment
    assert control_from_env(rel_tol=1e-7).rel_tol == 1e-7
    assert control_from_env(max_terms=42).max_terms == 42
