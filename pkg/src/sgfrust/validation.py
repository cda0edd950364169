"""Input coercion shared by the estimators and the command line."""

from __future__ import annotations

from collections.abc import Mapping

from .core import SignedGraph, check_signature
from .exceptions import MalformedInputError


def check_signed_graph(X, signature=None):
    """Coerce ``X`` into ``(G, Σ)``.

    Accepts a :class:`SignedGraph`, a ``(G, Σ)`` pair, ``sg1`` text or the
    JSON mirror as a mapping.  An explicit ``signature`` overrides the one
    carried by ``X``.
    """
    from . import io as sgio

    if isinstance(X, SignedGraph):
        G, sig = X, X.signature
    elif isinstance(X, tuple) and len(X) >= 2 and isinstance(X[0], SignedGraph):
        G, sig = X[0], check_signature(X[0], X[1])
    elif isinstance(X, str):
        G, sig = sgio.parse_graph(X)
    elif isinstance(X, Mapping):
        G, sig = sgio.graph_from_dict(dict(X))
    else:
        raise MalformedInputError(f"cannot interpret {type(X).__name__} as a signed graph")
    if signature is not None:
        sig = check_signature(G, signature)
    return G, sig


def check_graph_collection(Xs) -> list:
    if isinstance(Xs, (SignedGraph, str, Mapping)) or (
        isinstance(Xs, tuple) and Xs and isinstance(Xs[0], SignedGraph)
    ):
        Xs = [Xs]
    return [check_signed_graph(X) for X in Xs]
