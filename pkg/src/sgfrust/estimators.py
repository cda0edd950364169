"""scikit-learn style wrappers around the solvers.

A "sample" is one signed graph; ``fit`` analyses a single graph and
``predict`` maps a collection of graphs to one value each.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .criticality import is_critical
from .frustration import frustration
from .validation import check_graph_collection, check_signed_graph


class FrustrationIndex(BaseEstimator):
    """Frustration index of a signed graph.

    Parameters
    ----------
    method : str
        Solver (``"auto"``, ``"enum"``, ``"bnb"``, ``"oracle"``).
    collect_all : bool
        Also enumerate every minimum signature.
    time_budget : float or None
        Seconds for branch-and-bound.

    Attributes
    ----------
    index_ : int
    signature_ : frozenset
        A minimum signature.
    switch_set_ : frozenset
    certified_ : bool
    min_signatures_ : tuple or None
    stats_ : dict
    """

    def __init__(self, method="auto", collect_all=False, time_budget=None):
        self.method = method
        self.collect_all = collect_all
        self.time_budget = time_budget

    def _solve(self, G, sig):
        return frustration(G, sig, method=self.method, collect_all=self.collect_all,
                           time_budget=self.time_budget)

    def fit(self, X, y=None, signature=None):
        G, sig = check_signed_graph(X, signature)
        res = self._solve(G, sig)
        self.graph_ = G
        self.index_ = res.index
        self.signature_ = res.witness
        self.switch_set_ = res.switch_set
        self.certified_ = res.certified
        self.min_signatures_ = res.all_min_signatures
        self.stats_ = dict(res.stats)
        return self

    def transform(self, X=None):
        """The fitted graph re-signed with its minimum signature."""
        check_is_fitted(self, "index_")
        return self.graph_.with_signature(self.signature_)

    def fit_transform(self, X, y=None, **fit_params):
        return self.fit(X, y, **fit_params).transform()

    def predict(self, Xs):
        return np.array([self._solve(G, sig).index for G, sig in check_graph_collection(Xs)], dtype=int)


class CriticalityClassifier(BaseEstimator):
    """Whether a signed graph is critical for its frustration index.

    Attributes
    ----------
    report_ : CriticalityReport
    index_ : int
    critical_ : bool
    failing_edge_ : str or None
    """

    def __init__(self, method="auto", solver="auto", time_budget=None):
        self.method = method
        self.solver = solver
        self.time_budget = time_budget

    def _report(self, G, sig):
        return is_critical(G, sig, method=self.method, solver=self.solver, time_budget=self.time_budget)

    def fit(self, X, y=None, signature=None):
        G, sig = check_signed_graph(X, signature)
        self.report_ = self._report(G, sig)
        self.index_ = self.report_.index
        self.critical_ = self.report_.critical
        self.failing_edge_ = self.report_.failing_edge
        return self

    def predict(self, Xs):
        return np.array([self._report(G, sig).critical for G, sig in check_graph_collection(Xs)], dtype=bool)
