"""Adder-by-constant synthesis, simulation and resource audit."""

from ._qadd import *  # noqa: F401,F403
from ._qadd import QaddError, __doc__  # noqa: F401

__version__ = "0.1.0"
