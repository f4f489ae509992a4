"""Renyi-entropy separability conditions for continuous-variable systems.

Thin re-export of the compiled ``_cvren`` extension. In an installed wheel
the extension lives inside this package; in a plain CMake build tree it sits
on ``PYTHONPATH`` as a top-level module, so fall back to that.
"""

try:
    from ._cvren import *  # noqa: F401,F403
    from ._cvren import __doc__ as _doc
except ImportError:  # development build: extension next to the package
    from _cvren import *  # noqa: F401,F403
    from _cvren import __doc__ as _doc

__doc__ = _doc
__version__ = "0.1.0"
