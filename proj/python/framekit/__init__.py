"""p-approximate Schauder frames, Riesz bases and their dilations."""

from ._framekit import *  # noqa: F401,F403
from ._framekit import (  # noqa: F401
    DEFAULT_COND_LIMIT,
    DEFAULT_TOLERANCE,
    FramekitError,
    FramePair,
    NotInvertible,
)

__version__ = "0.1.0"
