"""Truncation control for every infinite series and continued fraction.

A single ``SeriesControl`` instance is threaded through the library; all
expansions stop once the relative tail drops below ``rel_tol``, with
``max_terms`` as a hard guard.

Complex quantities (incomplete gamma with imaginary argument, the
``2F2`` backend) are plain Python ``complex`` values throughout.
"""

from __future__ import annotations

import os
from dataclasses import dataclass


@dataclass(frozen=True)
class SeriesControl:
    """Relative tolerance and term cap for series truncation."""

    rel_tol: float = 1e-12
    max_terms: int = 500

    def __post_init__(self):
        if not self.rel_tol > 0.0:
            raise ValueError(f"rel_tol must be > 0, got {self.rel_tol}")
        if self.max_terms < 1:
            raise ValueError(f"max_terms must be >= 1, got {self.max_terms}")


DEFAULT_CONTROL = SeriesControl()

ENV_REL_TOL = "OSCINT_REL_TOL"


def control_from_env(rel_tol=None, max_terms=None):
    """Build a SeriesControl, honouring the OSCINT_REL_TOL env override.

    Explicit arguments win over the environment, which wins over the
    library defaults.
    """
    if rel_tol is None:
        env = os.environ.get(ENV_REL_TOL)
        rel_tol = float(env) if env else DEFAULT_CONTROL.rel_tol
    if max_terms is None:
        max_terms = DEFAULT_CONTROL.max_terms
    return SeriesControl(rel_tol=rel_tol, max_terms=max_terms)
