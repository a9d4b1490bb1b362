"""Degree theory of the partition graph G_n (C++ core)."""

from ._partgraph import *  # noqa: F401,F403
from ._partgraph import InvalidInput, ResourceLimit, __doc__  # noqa: F401

__version__ = "0.1.0"
