"""Exact computations in categories enriched in a quantale.

Documents are plain dicts mirroring the JSON formats of the command line
tool: categories {"quantale", "objects", "hom"}, modules {"source",
"target", "phi"}, presheaves {"base", "psi"}. Rationals are integers or
"p/q" strings; python floats are read as the exact rational they spell.
"""

try:
    from qcat._qcat import *  # noqa: F401,F403
    from qcat import _qcat as _impl
except ImportError:  # build-tree layout: extension sits next to the package
    from _qcat import *  # noqa: F401,F403
    import _qcat as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
__version__ = "0.1.0"
