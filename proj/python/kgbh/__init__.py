"""Klein-Gordon kernels, integral transforms and fixed-point solver in an expanding black hole space-time."""

from ._core import *  # noqa: F401,F403
from ._core import KgbhError  # noqa: F401

__version__ = "0.1.0"
