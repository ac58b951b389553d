"""Big q-Laguerre and q-Meixner numerics with identity verification."""

from ._core import *  # noqa: F401,F403
from ._core import QParams, run

__all__ = [name for name in dir() if not name.startswith("_")]
