"""Exact representations of welded braid groups over Laurent polynomial rings,
and the Long-Moody construction."""

from . import freegroup, io, longmoody, reps, ring, welded
from .freegroup import *  # noqa: F401,F403
from .io import *  # noqa: F401,F403
from .longmoody import *  # noqa: F401,F403
from .report import RepReport as RepReport
from .reps import *  # noqa: F401,F403
from .ring import *  # noqa: F401,F403
from .welded import *  # noqa: F401,F403

__version__ = "0.1.0"

__all__ = sorted({"RepReport", *freegroup.__all__, *io.__all__, *longmoody.__all__, *reps.__all__,
                  *ring.__all__, *welded.__all__})
