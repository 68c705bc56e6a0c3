"""Verification kernels for the sixth-moment bound (C++ core)."""

from ._core import *  # noqa: F401,F403
from ._core import Error, __version__  # noqa: F401
