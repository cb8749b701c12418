"""Kernel backend selection: compiled extension when available, else pure
Python.  Set ``CAUSALMODAL_PURE_PYTHON=1`` to force the fallback."""

from __future__ import annotations

import os

from . import _validity_py
from ._validity_py import (  # noqa: F401  (re-exported opcodes)
    OP_AND,
    OP_ATOM,
    OP_BOT,
    OP_BOX,
    OP_DIA,
    OP_IFF,
    OP_IMP,
    OP_NOT,
    OP_OR,
    OP_TOP,
)

if os.environ.get("CAUSALMODAL_PURE_PYTHON"):
    _compiled = None
else:
    try:
        from . import _validity_c as _compiled
    except ImportError:
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"

_C_MAX_WORLDS = 63
_C_MAX_OPS = 512
_C_MAX_VALUATIONS = 1 << 62


def find_countermodel(succ_masks, n_worlds, n_atoms, ops, args, n_valuations):
    """First (valuation, world-index) falsifying the program, or None."""
    if (
        _compiled is not None
        and n_worlds <= _C_MAX_WORLDS
        and len(ops) <= _C_MAX_OPS
        and n_valuations <= _C_MAX_VALUATIONS
    ):
        return _compiled.find_countermodel(
            succ_masks, n_worlds, n_atoms, ops, args, n_valuations
        )
    return _validity_py.find_countermodel(
        succ_masks, n_worlds, n_atoms, ops, args, n_valuations
    )


def backends() -> dict:
    """Available kernel implementations, keyed by name (for benchmarks)."""
    found = {"python": _validity_py.find_countermodel}
    if _compiled is not None:
        found["cython"] = _compiled.find_countermodel
    return found
