"""Radial expectation values and uncertainty products for three central
potentials, with a quadrature oracle for every closed form."""

from .estimator import RadialUncertaintyTransformer
from .observables import FIELDS, InvalidStateError, RadialObservables
from .systems import QuantumState, closed_form
from .verify import SuiteConfig, oracle_observables, run_suite

__version__ = "0.1.0"

__all__ = [
    "FIELDS",
    "InvalidStateError",
    "QuantumState",
    "RadialObservables",
    "RadialUncertaintyTransformer",
    "SuiteConfig",
    "closed_form",
    "oracle_observables",
    "run_suite",
]
