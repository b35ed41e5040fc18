"""Numerical tolerances used by validation helpers.

The defaults match the contracts the rest of the package is tested
against. ``SLEPNET_TOLERANCE`` overrides the base validation tolerance;
the residual tolerance scales with it (residuals accumulate roughly two
orders of magnitude more rounding than orthonormality checks).
"""

import os
from dataclasses import dataclass

DEFAULT_BASE = 1e-10

# Fixed thresholds, not subject to the env override.
EIGENVALUE_CLAMP = 1e-12     # negative eigenvalues above this floor are noise
DEGENERACY_TOL = 1e-9        # eigenvalue spacing treated as degenerate
CONNECTIVITY_TOL = 1e-12     # second eigenvalue below this means disconnected


@dataclass(frozen=True)
class Tolerances:
    orthonormality: float = DEFAULT_BASE
    residual: float = 100 * DEFAULT_BASE

    @classmethod
    def from_env(cls):
        """Resolve tolerances, honoring the SLEPNET_TOLERANCE override."""
        raw = os.environ.get("SLEPNET_TOLERANCE")
        if raw is None:
            return cls()
        base = float(raw)
        if base <= 0:
            raise ValueError("SLEPNET_TOLERANCE must be positive")
        return cls(orthonormality=base, residual=100 * base)
