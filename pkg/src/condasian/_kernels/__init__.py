"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; the pure
Python reference implementation is always available as a fallback and can
be forced with the environment variable ``CONDASIAN_PURE_PYTHON=1``.
Both expose the same functions with identical semantics.
"""

import os

from . import reference

_FORCE_PURE = os.environ.get("CONDASIAN_PURE_PYTHON", "").strip() in ("1", "true", "yes")

if not _FORCE_PURE:
    try:
        from . import _corefast as _impl
        BACKEND = "compiled"
    except ImportError:
        _impl = reference
        BACKEND = "pure-python"
else:
    _impl = reference
    BACKEND = "pure-python"

log_gamma = _impl.log_gamma
log_sin_pi = _impl.log_sin_pi
besseli_log_series = _impl.besseli_log_series
besselk_log_connection = _impl.besselk_log_connection
besseli_log_debye = _impl.besseli_log_debye
besselk_log_debye = _impl.besselk_log_debye
besseli_log_poincare = _impl.besseli_log_poincare
besselk_log_poincare = _impl.besselk_log_poincare
hyp1f2_unit = _impl.hyp1f2_unit
hyp1f2_unit_dz = _impl.hyp1f2_unit_dz
kummer_log_series = _impl.kummer_log_series


def backend_name():
    """Name of the active kernel backend ("compiled" or "pure-python")."""
    return BACKEND
