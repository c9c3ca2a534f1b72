"""Symbolic sequence toolkit: generators, densities, entropy, orbit checks,
and combinatorial pattern detectors over two-sided binary sequences."""

from shiftlab._core import *  # noqa: F401,F403
from shiftlab._core import __doc__  # noqa: F401
