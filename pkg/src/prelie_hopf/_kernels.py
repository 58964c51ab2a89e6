"""Kernel selection: the compiled extension when built, else pure Python."""
try:
    from ._ckernels import all_grafts
    BACKEND = "cython"
except ImportError:  # extension not built
    from ._pykernels import all_grafts
    BACKEND = "python"

__all__ = ["all_grafts", "BACKEND"]
