"""Backend selection for the batch estimator kernels.

The numba backend is used when numba imports cleanly, unless
``WPDF_DISABLE_NUMBA`` is set to a truthy value, in which case (or when
numba is missing) the pure-numpy backend is used.  Both backends expose
``sorted_quantile``, ``mle``, ``mmlm``, ``percentile``,
``modified_percentile`` and ``fit_all``.
"""

import importlib
import os

from . import _kernels_numpy

DISABLE_ENV = "WPDF_DISABLE_NUMBA"


def numba_disabled() -> bool:
    return os.environ.get(DISABLE_ENV, "").strip().lower() in ("1", "true", "yes", "on")


def get_backend(name: str):
    """Return the kernel module for ``"numba"`` or ``"numpy"``."""
    if name == "numpy":
        return _kernels_numpy
    if name == "numba":
        return importlib.import_module("wpdf._kernels_numba")
    raise ValueError(f"unknown kernel backend {name!r}")


def _select():
    if numba_disabled():
        return "numpy", _kernels_numpy
    try:
        return "numba", get_backend("numba")
    except ImportError:
        return "numpy", _kernels_numpy


BACKEND, _impl = _select()

METHODS = _kernels_numpy.METHODS
sorted_quantile = _impl.sorted_quantile
mle = _impl.mle
mmlm = _impl.mmlm
percentile = _impl.percentile
modified_percentile = _impl.modified_percentile
fit_all = _impl.fit_all
