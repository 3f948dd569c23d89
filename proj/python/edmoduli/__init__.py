"""Einstein-Dirac moduli of left-invariant metrics on S^3."""

from ._edmoduli import *  # noqa: F401,F403
from ._edmoduli import __version__  # noqa: F401
