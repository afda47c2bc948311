"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``QGAUSS_PURE=1`` to force the fallback.
"""

import os

if os.environ.get("QGAUSS_PURE"):
    from . import _pure as _impl
else:
    try:
        from . import _speedups as _impl
    except ImportError:  # extension not built
        from . import _pure as _impl

BACKEND = "compiled" if _impl.__name__.endswith("_speedups") else "pure"

combinations_masks = _impl.combinations_masks
inversions = _impl.inversions
odd_ascents = _impl.odd_ascents
word_stats = _impl.word_stats
inversion_counts = _impl.inversion_counts
lower_ideals = _impl.lower_ideals
