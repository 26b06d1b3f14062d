"""Exact invariants and pair classification for nilpotent Lie algebras.

Thin convenience layer over the compiled ``_nilpair`` module: the JSON
interfaces are decoded into plain dicts.
"""

import json as _json

from _nilpair import (  # noqa: F401
    LieAlgebra,
    __version__,
    abelian,
    algebra,
    catalog_names,
    direct_sum,
    from_json,
    heisenberg,
    invariants,
    multiplier_dim,
    pair_invariants,
    s_invariant,
    self_check_ok,
    t_invariant,
)
import _nilpair as _core


def classify(s, allow_trivial_k=None):
    """All split pairs (N, L) with s(N, L) = s, as a dict."""
    return _json.loads(_core.classify_json(s, allow_trivial_k))


def verify(s):
    """Diff of classify(s) against the reference list, as a dict."""
    return _json.loads(_core.verify_json(s))
