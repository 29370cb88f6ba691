"""Backend selection for the Farey graph kernels.

The compiled extension is used when it imports; set
``PANTSFAREY_PURE=1`` to force the pure-Python kernels.
"""

import os

from . import _pykernels

_compiled = None
if not os.environ.get("PANTSFAREY_PURE"):
    try:
        from . import _ckernels as _compiled
    except ImportError:
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"


def _fits(bound, *coords):
    return _compiled is not None and bound <= _compiled.MAX_BOUND and all(
        abs(c) <= bound for c in coords
    )


def neighbors(p, q, bound):
    if _fits(bound, p, q):
        return _compiled.neighbors(p, q, bound)
    return _pykernels.neighbors(p, q, bound)


def bounded_distance(ap, aq, bp, bq, bound, want_path=False):
    if _fits(bound, ap, aq, bp, bq):
        return _compiled.bounded_distance(ap, aq, bp, bq, bound, want_path)
    return _pykernels.bounded_distance(ap, aq, bp, bq, bound, want_path)
