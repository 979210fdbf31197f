"""Backend selection for the enumeration kernels.

Two interchangeable implementations exist: a numba-jitted scalar scan and
a vectorised pure-numpy fallback. CRITIGRAPH_BACKEND forces one ("numba"
or "numpy"); the default is numba when importable, numpy otherwise. Both
expose the same two entry points and produce bit-identical results:

    search_chunk(n, start, count, enforce_schwarz)
        -> (max_edges, witness_mask, attain_count, critical_count,
            sc_count, schwarz_violation_mask)   (-1 sentinels where empty)
    classify_chunk(n, start, count)
        -> uint8 array: 0 not strongly connected, 1 strongly connected,
           2 vertex-critical
"""

import os

from .errors import ValidationError

_ENV_VAR = "CRITIGRAPH_BACKEND"


def load_backend(name=None):
    """Import and return a kernel backend module by name ("numba"/"numpy").

    With name=None the environment variable (then auto-detection) decides.
    """
    if name is None:
        name = os.environ.get(_ENV_VAR, "").strip().lower() or "auto"
    if name not in ("auto", "numba", "numpy"):
        raise ValidationError(
            f"unknown kernel backend {name!r}; expected 'numba' or 'numpy'"
        )
    if name in ("auto", "numba"):
        try:
            from . import _kernels_numba

            return _kernels_numba
        except ImportError:
            if name == "numba":
                raise
    from . import _kernels_numpy

    return _kernels_numpy


_backend = load_backend()

BACKEND_NAME = _backend.NAME
search_chunk = _backend.search_chunk
classify_chunk = _backend.classify_chunk
