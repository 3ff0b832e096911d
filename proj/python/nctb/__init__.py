"""Non-clashing teaching maps for balls in graphs."""

from ._nctb import *  # noqa: F401,F403
from ._nctb import Error, InvalidWitness, Graph

__all__ = [name for name in dir() if not name.startswith("_")]
