"""Metric of the circle-of-directions compactification of the plane,
constructive polynomial approximation on the closed unit disc, and
classification of polynomial-sequence limits.

The heavy lifting lives in the compiled extension ``_cbar``; this package
re-exports its public names unchanged.
"""

try:
    from . import _cbar as _impl
    from ._cbar import *  # noqa: F401,F403
except ImportError:  # extension built next to the package instead of inside it
    import _cbar as _impl
    from _cbar import *  # noqa: F401,F403

__version__ = "0.1.0"
__all__ = [name for name in dir(_impl) if not name.startswith("_")]
