"""Kernel dispatch: the compiled module if it was built, else the pure-Python one.

Set ``IWASAWA_PURE_PYTHON=1`` to force the fallback.
"""

import os

BACKEND = "python"
if os.environ.get("IWASAWA_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from ._kernels import descents, first_descent, inversions, last_descent, rank_mod_p

        BACKEND = "cython"
    except ImportError:
        pass

if BACKEND == "python":
    from ._pykernels import descents, first_descent, inversions, last_descent, rank_mod_p

__all__ = ["BACKEND", "descents", "first_descent", "inversions", "last_descent", "rank_mod_p"]
