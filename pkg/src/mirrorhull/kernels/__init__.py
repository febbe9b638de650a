"""Hot-loop kernels: compiled extension when available, numpy fallback otherwise.

Both backends expose the same two functions with the same numerics (cofactor
normals, LU determinants), so facet sets agree at the geometric tolerance.
BACKEND records which one was selected at import time.
"""

try:
    from . import _native as _impl

    BACKEND = "native"
except ImportError:  # extension not built; the numpy path is fully equivalent
    from . import _fallback as _impl

    BACKEND = "fallback"

candidate_facets = _impl.candidate_facets
count_inside = _impl.count_inside

__all__ = ["BACKEND", "candidate_facets", "count_inside"]
