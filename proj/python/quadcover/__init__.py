"""Deterministic multi-UAV coverage planning for convex quadrilateral regions.

Packs equal circles in the unit square, maps them through a homography onto
the target quadrilateral as tangent elliptical footprints, and computes each
UAV's optimal altitude, antenna tilt and semi-apex angle under an LoS/NLoS
air-to-ground path-loss model.
"""

from quadcover._core import *  # noqa: F401,F403
from quadcover._core import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
