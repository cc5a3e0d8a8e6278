"""Kernel selection: compiled extension if built, pure Python otherwise.

Set CATFORGE_PURE=1 to force the pure-Python kernels even when the compiled
core is available.
"""

import os

from . import _kernels_py

if os.environ.get("CATFORGE_PURE"):
    _impl = _kernels_py
else:
    try:
        from . import _core as _impl
    except ImportError:
        _impl = _kernels_py

IMPL = _impl.IMPL
DEFAULT_BUDGET = _kernels_py.DEFAULT_BUDGET

assoc_violation = _impl.assoc_violation
enumerate_monoid_tables = _impl.enumerate_monoid_tables
enumerate_bimodule_tables = _impl.enumerate_bimodule_tables
complete_category_tables = _impl.complete_category_tables
