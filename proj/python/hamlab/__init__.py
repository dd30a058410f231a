from ._hamlab import *  # noqa: F401,F403
from ._hamlab import DomainError, GadgetInvalid  # noqa: F401
