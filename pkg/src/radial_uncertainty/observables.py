"""Types shared by the three radial problems."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, fields

__all__ = ["FIELDS", "InvalidStateError", "RadialObservables", "observables_from_moments"]


class InvalidStateError(ValueError):
    """Quantum numbers that the named system does not admit."""


@dataclass(frozen=True)
class RadialObservables:
    """Radial means, spreads and the uncertainty product of one state.

    Values are in the natural units of the system the state belongs to
    (lengths in ``a0/Z``, ``R`` or ``sqrt(hbar/m omega)``, momenta in the
    matching inverse, the product in ``hbar``).  ``mean_pr`` is the real
    coefficient ``I`` of ``<p_r> = -i hbar I``.
    """

    mean_r: float
    mean_r2: float
    mean_inv_r: float
    mean_inv_r2: float
    delta_r: float
    mean_pr: float
    mean_pr2: float
    delta_pr: float
    sigma_r: float
    product: float

    def as_dict(self):
        return asdict(self)


FIELDS = tuple(f.name for f in fields(RadialObservables))


def observables_from_moments(mean_r, mean_r2, mean_inv_r, mean_inv_r2, mean_pr, mean_pr2):
    """Fill in the derived spreads from raw expectation values."""
    delta_r = math.sqrt(max(mean_r2 - mean_r**2, 0.0))
    delta_pr = math.sqrt(max(mean_pr2 - mean_pr**2, 0.0))
    return RadialObservables(
        mean_r=mean_r,
        mean_r2=mean_r2,
        mean_inv_r=mean_inv_r,
        mean_inv_r2=mean_inv_r2,
        delta_r=delta_r,
        mean_pr=mean_pr,
        mean_pr2=mean_pr2,
        delta_pr=delta_pr,
        sigma_r=delta_r / mean_r,
        product=delta_r * delta_pr,
    )
