"""Kernel backend selection.

The compiled extension is used when it was built and ``MAXTREE_PURE_PYTHON``
is unset; otherwise the pure-Python implementation is used.  Both share one
contract, so callers never branch on the backend.
"""
import os

from . import _chain_py

BACKEND = "python"
_compiled = None
if not os.environ.get("MAXTREE_PURE_PYTHON"):
    try:
        from . import _chain as _compiled
        BACKEND = "cython"
    except ImportError:
        _compiled = None


def chain_counts(parents, jmax):
    if _compiled is not None:
        try:
            return _compiled.chain_counts(parents, jmax)
        except OverflowError:
            pass
    return _chain_py.chain_counts(parents, jmax)
