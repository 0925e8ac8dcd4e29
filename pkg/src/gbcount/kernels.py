"""Select the staircase-scan backend.

The compiled extension is used when importable; set ``GBCOUNT_KERNELS=python``
to force the pure-Python fallback.
"""
import os

from . import _kernels_py

if os.environ.get("GBCOUNT_KERNELS", "").lower() == "python":
    _impl = _kernels_py
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = _impl.BACKEND
make_plan = _impl.make_plan
scan = _impl.scan
solve_staircase = _kernels_py.solve_staircase
