"""Pick the compiled intersection kernel when it was built, else NumPy."""

from __future__ import annotations

import os

BACKEND = "python"
if os.environ.get("ONEVIS_PURE_PYTHON") != "1":
    try:
        from ._naive import naive_pairs

        BACKEND = "cython"
    except ImportError:
        pass
if BACKEND == "python":
    from ._naive_py import naive_pairs

__all__ = ["BACKEND", "naive_pairs"]
