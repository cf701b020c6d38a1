"""Exact desk-scale engine for melting-crystal states, hexagon vertex classes,
and row-transfer algebra."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
