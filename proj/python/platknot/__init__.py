"""Plat presentations of links.

Braid words and their induced permutations, plat closures with component
tracing, normalization to special form via the four plat moves, and the
classification of p-fold cyclic branched coverings with the symmetric
Heegaard genus bound (n-1)(p-1).
"""

from ._platknot import *  # noqa: F401,F403
from ._platknot import __version__  # noqa: F401
