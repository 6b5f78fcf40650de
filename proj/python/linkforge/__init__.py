"""Planar linkage synthesis from motion polynomial factorization."""

try:
    from ._linkforge import *  # noqa: F401,F403
    from ._linkforge import __doc__  # noqa: F401
except ImportError:  # in-tree builds put the extension on sys.path directly
    from _linkforge import *  # noqa: F401,F403
