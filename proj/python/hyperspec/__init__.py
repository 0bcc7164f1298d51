"""Normalized and signless normalized Laplacian spectra of oriented hypergraphs."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
