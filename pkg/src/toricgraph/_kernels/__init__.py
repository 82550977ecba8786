"""Hot linear-algebra kernels with a compiled core and a numpy fallback.

``rank_mod_p`` is resolved once at import: the Cython extension if it was
built, the numpy implementation otherwise. ``BACKEND`` records the choice
(benchmarks and the CLI report it).
"""

try:
    from ._gfcore import rank_mod_p

    BACKEND = "cython"
except ImportError:  # extension not built
    from .dense import rank_mod_p

    BACKEND = "fallback"

__all__ = ["rank_mod_p", "BACKEND"]
