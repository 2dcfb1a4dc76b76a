"""Radii of starlikeness and convexity for a z^2 J'' + b z J' + c J."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
