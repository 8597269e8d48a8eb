from ._core import *  # noqa: F401,F403
from ._core import (
    BoundaryCondition,
    CapacityError,
    Domain,
    DomainError,
    Error,
    NumericFailure,
    ParseError,
)

__version__ = "0.1.0"
