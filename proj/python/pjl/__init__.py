"""Prime juggling pattern counts, oracles and checks."""

from ._pjl import *  # noqa: F401,F403
