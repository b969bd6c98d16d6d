from ._core import *  # noqa: F401,F403
from ._core import ComputationError, ParseError  # noqa: F401
