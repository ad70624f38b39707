"""Parametric-resonance zones of the planar circular restricted three-body problem."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
