"""scikit-learn wrapper: quantum numbers in, observables out.

``X`` holds one state per row as ``(n, ell)``. Nothing is learned; ``fit``
only validates the states and records the output layout, so the
transformer can sit inside a Pipeline or be cloned by a grid search.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .observables import FIELDS, InvalidStateError
from .systems import SYSTEM_NAMES, QuantumState, closed_form
from .verify import oracle_observables

METHODS = ("closed_form", "oracle")


class RadialUncertaintyTransformer(TransformerMixin, BaseEstimator):
    """Map ``(n, ell)`` rows to the ten radial observables of each state.

    Parameters
    ----------
    system : {"hydrogen", "isw", "sho"}
    Z : int
        Nuclear charge, hydrogen only.
    method : {"closed_form", "oracle"}
        Closed forms, or the quadrature oracle built from the wavefunction.
    """

    def __init__(self, system="hydrogen", Z=1, method="closed_form"):
        self.system = system
        self.Z = Z
        self.method = method

    def _validate_params(self):
        if self.system not in SYSTEM_NAMES:
            raise ValueError(f"system must be one of {SYSTEM_NAMES}, got {self.system!r}")
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}, got {self.method!r}")

    def _states(self, X):
        X = check_array(X, dtype="numeric")
        if X.shape[1] != 2:
            raise ValueError(f"X must have two columns (n, ell), got {X.shape[1]}")
        if not np.all(X == np.round(X)):
            raise InvalidStateError("quantum numbers must be integers")
        Z = self.Z if self.system == "hydrogen" else 1
        return [QuantumState(self.system, int(n), int(ell), Z) for n, ell in X]

    def fit(self, X, y=None):
        self._validate_params()
        self._states(X)
        self.n_features_in_ = 2
        self.feature_names_out_ = np.asarray(FIELDS, dtype=object)
        return self

    def transform(self, X):
        check_is_fitted(self, "feature_names_out_")
        evaluate = closed_form if self.method == "closed_form" else oracle_observables
        rows = [[getattr(evaluate(s), f) for f in FIELDS] for s in self._states(X)]
        return np.asarray(rows, dtype=float).reshape(-1, len(FIELDS))

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "feature_names_out_")
        return self.feature_names_out_.copy()
