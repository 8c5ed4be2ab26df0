"""Kernel selection: compiled extension if importable, numpy fallback otherwise.

Set ``DISTBAL_BACKEND=python`` to force the fallback.
"""

import os

if os.environ.get("DISTBAL_BACKEND", "").lower() == "python":
    from distbal import _pykernels as kernels

    BACKEND = "python"
else:
    try:
        from distbal import _ckernels as kernels

        BACKEND = "cython"
    except ImportError:  # extension not built
        from distbal import _pykernels as kernels

        BACKEND = "python"

__all__ = ["BACKEND", "kernels"]
