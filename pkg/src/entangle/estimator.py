"""Local-unitary invariants as an sklearn transformer."""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_states
from .invariants import evaluate_invariant
from .permgroup import DEFAULT_BUDGET, orbits


class LocalUnitaryInvariants(TransformerMixin, BaseEstimator):
    """Map each state to the values of all degree-``2 * degree`` invariants.

    One output column per conjugation class of S_degree^(r-1), in increasing
    canonical order.  Two states in the same local-unitary orbit get the same
    row; at high enough degree, distinct orbits get different rows.

    Parameters
    ----------
    degree : int
        The m of the invariants (polynomial degree 2m).
    method : {"direct", "einsum"}
        Summation strategy passed to :func:`evaluate_invariant`.
    budget : int
        Maximum number of index tuples summed per invariant.

    Attributes
    ----------
    state_shape_ : tuple of int
    classes_ : list of OrbitClass
    n_features_out_ : int
    """

    def __init__(self, degree=2, method="direct", budget=DEFAULT_BUDGET):
        self.degree = degree
        self.method = method
        self.budget = budget

    def fit(self, X, y=None):
        X = check_states(X)
        if self.degree < 1:
            raise ValueError(f"degree must be >= 1, got {self.degree}")
        if self.method not in ("direct", "einsum"):
            raise ValueError(f"unknown method {self.method!r}")
        self.state_shape_ = X.shape[1:]
        self.classes_ = orbits(self.degree, len(self.state_shape_) - 1, budget=self.budget)
        self.n_features_out_ = len(self.classes_)
        return self

    def transform(self, X):
        check_is_fitted(self, "classes_")
        X = check_states(X, self.state_shape_)
        out = np.empty((X.shape[0], len(self.classes_)), dtype=np.complex128)
        for i, state in enumerate(X):
            for j, cls in enumerate(self.classes_):
                out[i, j] = evaluate_invariant(cls, state, self.budget, self.method)
        return out

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "classes_")
        return np.array([f"f[{cls}]" for cls in self.classes_], dtype=object)
