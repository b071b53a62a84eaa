"""Finite quantum phase-space toolkit."""

try:
    from ._qps import *  # noqa: F401,F403
    from ._qps import __doc__  # noqa: F401
except ImportError:  # running against a build tree where _qps sits on sys.path
    from _qps import *  # noqa: F401,F403
